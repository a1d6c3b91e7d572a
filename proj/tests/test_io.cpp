#include <gtest/gtest.h>

#include <regex>
#include <sstream>

#include "tfractal/tfractal.hpp"

using namespace tfractal;

namespace {

std::size_t count_matches(const std::string& text, const std::regex& re) {
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

std::string parse_message(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const parse_error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Json, FractalRoundTrip) {
  const TFractal f = build_fractal(3);
  EXPECT_EQ(parse_graph(serialize_graph(f.graph)), f.graph);
}

TEST(Json, InstanceRoundTrip) {
  const TFractal f = build_fractal(2, true, 3);
  const auto inst = make_lbec(f.graph, f.sigma, f.tau, 4, 3);
  const std::string text = serialize_instance(inst);
  const auto back = parse_instance(text);
  EXPECT_EQ(back.kind, inst.kind);
  EXPECT_EQ(back.graph, inst.graph);
  EXPECT_EQ(back.s, inst.s);
  EXPECT_EQ(back.t, inst.t);
  EXPECT_EQ(back.k, inst.k);
  EXPECT_EQ(back.ell, inst.ell);
  EXPECT_EQ(serialize_instance(back), text);
}

TEST(Json, Schema) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  EXPECT_EQ(serialize_instance(make_lbec(g, 0, 2, 1, 2)),
            R"({"problem":"lbec","directed":false,"n":3,"edges":[[0,1],[1,2]],"s":0,"t":2,"k":1,"ell":2})");
  EXPECT_EQ(serialize_instance(make_dsct(Graph(2, true), 0, 0)),
            R"({"problem":"dsct","directed":true,"n":2,"edges":[],"k":0,"ell":0})");
}

TEST(Json, MdedHasNoTerminals) {
  const auto inst = parse_instance(R"({"problem":"mded","directed":false,"n":2,"edges":[[0,1]],"k":0,"ell":1})");
  EXPECT_EQ(inst.kind, ProblemKind::mded);
  EXPECT_FALSE(inst.s);
}

TEST(Json, ErrorsNameTheField) {
  EXPECT_NE(parse_message("{").find("malformed JSON"), std::string::npos);
  EXPECT_NE(parse_message(R"({"problem":"lbec","directed":false,"n":2,"edges":[[0,1]],"s":0,"t":1,"ell":1})")
                .find("field 'k'"),
            std::string::npos);
  EXPECT_NE(parse_message(R"({"problem":"nope","directed":false,"n":2,"edges":[],"k":0,"ell":1})").find("'problem'"),
            std::string::npos);
  EXPECT_NE(parse_message(R"({"problem":"lbec","directed":false,"n":2,"edges":[[0,5]],"s":0,"t":1,"k":0,"ell":1})")
                .find("edges[0]"),
            std::string::npos);
  EXPECT_NE(parse_message(R"({"problem":"lbec","directed":false,"n":2,"edges":[[0,1]],"s":0,"k":0,"ell":1})")
                .find("field 't'"),
            std::string::npos);
  EXPECT_NE(parse_message(R"({"problem":"lbec","directed":"no","n":2,"edges":[],"s":0,"t":1,"k":0,"ell":1})")
                .find("field 'directed'"),
            std::string::npos);
  EXPECT_THROW(parse_instance("[]"), parse_error);
}

TEST(Json, CostsAndLabels) {
  Graph g(2);
  g.add_edge(0, 1, 7);
  g.set_label(0, "sigma");
  const std::string text = serialize_graph(g);
  EXPECT_NE(text.find(R"("costs":[7])"), std::string::npos);
  EXPECT_NE(text.find(R"("labels":{"0":"sigma"})"), std::string::npos);
  EXPECT_EQ(parse_graph(text), g);
}

TEST(Json, Verdict) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  Verdict v;
  v.answer = true;
  v.witness = {1};
  v.nodes = 4;
  EXPECT_EQ(verdict_to_json(g, v).dump(), R"({"answer":true,"witness":[[1,2]],"nodes":4})");
}

TEST(Dot, DepthOne) {
  const std::string dot = fractal_to_dot(build_fractal(1));
  EXPECT_EQ(dot.rfind("graph", 0), 0u);
  EXPECT_EQ(count_matches(dot, std::regex(R"(^  \d+( \[[^\]]*\])?;$)", std::regex::multiline)), 3u);
  EXPECT_EQ(count_matches(dot, std::regex(R"( -- )")), 3u);
  EXPECT_NE(dot.find(R"(0 [role="sigma"])"), std::string::npos);
  EXPECT_NE(dot.find(R"(2 [role="tau"])"), std::string::npos);
  EXPECT_NE(dot.find("boundary=1"), std::string::npos);
}

TEST(Dot, DirectedUsesArrows) {
  const std::string dot = fractal_to_dot(build_fractal(1, true));
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_EQ(count_matches(dot, std::regex(R"( -> )")), 3u);
}

TEST(Dimacs, EdgeCount) {
  for (std::size_t q = 0; q <= 6; ++q) {
    const std::string text = to_dimacs(build_fractal(q).graph);
    std::istringstream in(text);
    std::string p, kind;
    std::size_t n = 0, m = 0;
    in >> p >> kind >> n >> m;
    EXPECT_EQ(n, (std::size_t{1} << q) + 1);
    EXPECT_EQ(m, (std::size_t{2} << q) - 1);
    EXPECT_EQ(count_matches(text, std::regex(R"(\ne \d+ \d+)")), m);
  }
  EXPECT_EQ(to_dimacs(build_fractal(0).graph), "p edge 2 1\ne 1 2\n");
}

TEST(VcJson, RoundTrip) {
  const auto vc = parse_vc(R"({"n":3,"edges":[[0,1],[1,2]],"k":2})");
  EXPECT_EQ(vc.graph.vertex_count(), 3u);
  EXPECT_EQ(vc.graph.edge_count(), 2u);
  EXPECT_EQ(vc.k, 2);
  EXPECT_EQ(serialize_vc(vc), R"({"n":3,"edges":[[0,1],[1,2]],"k":2})");
  EXPECT_THROW(parse_vc(R"({"n":3,"edges":[[0,1]]})"), parse_error);
}

TEST(EmbeddingJson, RoundTrip) {
  const auto emb = parse_embedding(R"({"order":[2,0,1],"pages":{"0-1":"upper","2-1":"lower"}})");
  EXPECT_EQ(emb.order, (std::vector<Vertex>{2, 0, 1}));
  EXPECT_EQ(emb.pages.at({1, 2}), Page::lower);
  EXPECT_EQ(serialize_embedding(emb), R"({"order":[2,0,1],"pages":{"0-1":"upper","1-2":"lower"}})");
  EXPECT_THROW(parse_embedding(R"({"order":[0],"pages":{"01":"upper"}})"), parse_error);
  EXPECT_THROW(parse_embedding(R"({"order":[0],"pages":{"0-1":"middle"}})"), parse_error);
}

TEST(Sidecar, Fields) {
  std::vector<ProblemInstance> in(2, padding_instance(1, 3, false));
  const auto art = compose_mded(in, false);
  const Json side = sidecar_to_json(art);
  EXPECT_EQ(side["selector"]["1"], 1);
  EXPECT_EQ(side["selector"]["2"], 2);
  EXPECT_EQ(side["params"]["p"], 2);
  EXPECT_EQ(side["params"]["L"], *art.params.L);
  EXPECT_EQ(side["mode"], "weighted");
  EXPECT_FALSE(sidecar_to_json(compose_lbec(in))["params"].contains("L"));
}
