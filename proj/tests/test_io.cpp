#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "json.hpp"
#include "mla/io.hpp"
#include "support.hpp"

using namespace mla;
using mla::fixtures::Gen;
using mla::fixtures::plus_pair;
using mla::fixtures::random_cocycle;

namespace {

std::vector<io::Document> samples() {
  Gen g(71);
  std::vector<io::Document> out;
  out.push_back(base_algebra(BaseName::sl2));
  out.push_back(LieAlgebra::abelian(0));
  LieAlgebra sl2 = base_algebra(BaseName::sl2);
  out.push_back(validate_metric(sl2, killing_form(sl2)));
  Pair pr = plus_pair(BaseName::n2, {Rational(1, 3)}, 1);
  out.push_back(pr.module());
  out.push_back(Representation::adjoint(share(base_algebra(BaseName::h1))));
  QuadraticCocycle z = random_cocycle(g, pr);
  out.push_back(io::CocycleDocument{pr, z});
  out.push_back(build_model(pr, z));
  out.push_back(catalog_row(RowKey{BaseName::sl2, "I", {}}).model);
  RowKey k{BaseName::su2, "I", {}};
  k.params.k_odd = {1, 2};
  k.params.k_quat = {1};
  k.params.c = Rational(-7, 2);
  out.push_back(k);
  RowKey h{BaseName::h1, "II", {}};
  h.params.lambda = {{1, Rational(-2, 5)}};
  out.push_back(h);
  return out;
}

std::string location_of(const std::string& text) {
  try {
    io::parse_document(text);
  } catch (const ParseError& e) {
    return e.location;
  }
  return "<accepted>";
}

std::string with_payload(const std::string& kind, const std::string& payload) {
  return R"({"format_version":"1","kind":")" + kind + R"(","payload":)" + payload + "}";
}

}  // namespace

TEST(Io, RoundTripIsStable) {
  for (const auto& d : samples()) {
    std::string text = io::serialize(d);
    io::Document back = io::parse_document(text);
    EXPECT_EQ(io::kind_of(back), io::kind_of(d));
    EXPECT_EQ(io::serialize(back), text);
  }
}

TEST(Io, RoundTripPreservesData) {
  auto docs = samples();
  EXPECT_EQ(std::get<LieAlgebra>(io::parse_document(io::serialize(docs[0]))), std::get<LieAlgebra>(docs[0]));
  const auto& cd = std::get<io::CocycleDocument>(docs[5]);
  auto back = std::get<io::CocycleDocument>(io::parse_document(io::serialize(docs[5])));
  EXPECT_EQ(back.cocycle, cd.cocycle);
  EXPECT_EQ(back.pair.module().action(), cd.pair.module().action());
  const auto& m = std::get<StandardModel>(docs[7]);
  auto mb = std::get<StandardModel>(io::parse_document(io::serialize(docs[7])));
  ASSERT_TRUE(mb.ip_l.has_value());
  EXPECT_EQ(mb.ip_l->gram(), m.ip_l->gram());
  EXPECT_EQ(mb.metric.form.gram(), m.metric.form.gram());
  auto kb = std::get<RowKey>(io::parse_document(io::serialize(docs[8])));
  EXPECT_EQ(kb.params, std::get<RowKey>(docs[8]).params);
}

TEST(Io, FileRoundTrip) {
  std::string path = ::testing::TempDir() + "mla_io_roundtrip.json";
  std::string text = io::serialize(samples()[2]);
  std::ofstream(path) << text;
  EXPECT_EQ(io::serialize(io::read_document(path)), text);
  std::remove(path.c_str());
  try {
    io::read_document(path);
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location, path);
  }
}

TEST(Io, ErrorLocations) {
  EXPECT_EQ(location_of("{\"kind\" 1}").rfind("byte ", 0), 0u);
  EXPECT_EQ(location_of(R"({"kind":"lie","payload":{}})"), "$");
  EXPECT_EQ(location_of(R"({"format_version":"2","kind":"lie","payload":{}})"), "$.format_version");
  EXPECT_EQ(location_of(with_payload("nope", "{}")), "$.kind");
  EXPECT_EQ(location_of(with_payload("lie", R"({"dim":2,"labels":["a","b"]})")), "$.payload");
  std::string bad_q = with_payload("lie", R"({"dim":2,"labels":["a","b"],"brackets":[[0,1,0,"1/0"]]})");
  EXPECT_NE(location_of(bad_q).find("$.payload.brackets"), std::string::npos) << location_of(bad_q);
  std::string bad_i = with_payload("lie", R"({"dim":2,"labels":["a","b"],"brackets":[[0,5,0,"1"]]})");
  EXPECT_NE(location_of(bad_i).find("$.payload.brackets"), std::string::npos) << location_of(bad_i);
}

TEST(Io, InvalidDataIsRejected) {
  // Well-formed but violates Jacobi.
  std::string text = with_payload(
      "lie", R"({"dim":3,"labels":["a","b","c"],"brackets":[[0,1,2,"1"],[0,2,0,"1"],[1,2,1,"1"]]})");
  EXPECT_THROW(io::parse_document(text), InvalidInput);
  // Metric not invariant.
  std::string metric = with_payload(
      "metric", R"({"lie":{"dim":2,"labels":["a","b"],"brackets":[[0,1,1,"1"]]},"form":[["1","0"],["0","1"]]})");
  EXPECT_THROW(io::parse_document(metric), InvalidInput);
  // Catalog row violating a constraint.
  std::string row = with_payload(
      "catalog_row",
      R"({"base":"n2","variant":"III","params":{"lambda":[],"r":"0","nu":"0","mu":"0","c":"0","gamma":"0","k_odd":[],"k_quat":[]}})");
  EXPECT_NO_THROW(io::parse_document(row));
  EXPECT_THROW(catalog_row(std::get<RowKey>(io::parse_document(row))), InvalidInput);
}

TEST(Io, ExpectReportsKind) {
  io::Document d = base_algebra(BaseName::h1);
  EXPECT_NO_THROW(io::expect<LieAlgebra>(d, "lie"));
  try {
    io::expect<Representation>(d, "representation");
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location, "kind");
  }
}

// Random single-token mutations never escape as anything but InvalidInput.
TEST(Io, MutationFuzz) {
  Gen g(72);
  auto docs = samples();
  const std::string alphabet = "{}[]\",:0123456789-/abcxyz ";
  int accepted = 0, rejected = 0;
  for (int t = 0; t < 600; ++t) {
    std::string text = io::serialize(docs[t % docs.size()]);
    const int edits = static_cast<int>(g.integer(1, 3));
    for (int e = 0; e < edits; ++e) {
      std::size_t pos = static_cast<std::size_t>(g.integer(0, static_cast<long>(text.size()) - 1));
      switch (g.integer(0, 2)) {
        case 0:
          text[pos] = alphabet[static_cast<std::size_t>(g.integer(0, static_cast<long>(alphabet.size()) - 1))];
          break;
        case 1:
          text.erase(pos, 1);
          break;
        default:
          text.insert(pos, 1, alphabet[static_cast<std::size_t>(g.integer(0, static_cast<long>(alphabet.size()) - 1))]);
      }
    }
    try {
      io::Document d = io::parse_document(text);
      ++accepted;
      // whatever was accepted must serialize and reparse identically
      std::string again = io::serialize(d);
      EXPECT_EQ(io::serialize(io::parse_document(again)), again);
    } catch (const InvalidInput&) {
      ++rejected;
    } catch (const std::exception& e) {
      ADD_FAILURE() << "unexpected " << e.what() << "\n" << text;
    }
  }
  EXPECT_GT(rejected, 0);
}

// Structural mutations of the JSON tree: wrong types, dropped keys, out-of-range indices.
TEST(Io, TreeFuzz) {
  Gen g(73);
  auto docs = samples();
  for (int t = 0; t < 400; ++t) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(io::serialize(docs[t % docs.size()]));
    std::vector<nlohmann::ordered_json*> nodes;
    std::vector<nlohmann::ordered_json*> stack{&j};
    while (!stack.empty()) {
      auto* n = stack.back();
      stack.pop_back();
      nodes.push_back(n);
      if (n->is_structured())
        for (auto& c : *n) stack.push_back(&c);
    }
    auto* target = nodes[static_cast<std::size_t>(g.integer(0, static_cast<long>(nodes.size()) - 1))];
    switch (g.integer(0, 4)) {
      case 0: *target = nullptr; break;
      case 1: *target = "x"; break;
      case 2: *target = g.integer(-3, 40); break;
      case 3: *target = nlohmann::ordered_json::array(); break;
      default:
        if (target->is_object() && !target->empty()) target->erase(target->begin());
        else *target = nlohmann::ordered_json::object();
    }
    try {
      io::parse_document(j.dump());
    } catch (const InvalidInput&) {
    } catch (const std::exception& e) {
      ADD_FAILURE() << "unexpected " << e.what() << "\n" << j.dump();
    }
  }
}
