#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "nakaoka/errors.hpp"
#include "nakaoka/io.hpp"

namespace nakaoka {
namespace {

using io::Json;

std::string error_name(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.name();
  } catch (const io::InputError&) {
    return "InputError";
  }
  return "";
}

const Json fp_z4 = Json::parse(R"({"generator": "fp", "group": "C2", "ring": {"construct": "Zn", "params": [4]}})");

TEST(Io, GroupNames) {
  EXPECT_EQ(io::group_from_name("C12").order(), 12u);
  EXPECT_EQ(io::group_from_name("C2xC2xC2").order(), 8u);
  EXPECT_EQ(io::group_from_name("D8").order(), 8u);
  EXPECT_EQ(io::group_from_name("Q8").order(), 8u);
  EXPECT_EQ(io::group_from_name("S3").order(), 6u);
  EXPECT_EQ(io::group_from_name("e").order(), 1u);
  EXPECT_EQ(error_name([] { io::group_from_name("Z7"); }), "InvalidParameter");
  EXPECT_EQ(error_name([] { io::group_from_name("D7"); }), "InvalidParameter");
}

TEST(Io, GroupRoundTrip) {
  for (auto g : {FiniteGroup::quaternion(), FiniteGroup::symmetric(3), FiniteGroup::product_of_cyclic({2, 4})}) {
    const auto back = io::parse_group(io::group_to_json(g));
    EXPECT_EQ(back.cayley(), g.cayley());
    EXPECT_EQ(back.labels(), g.labels());
  }
  const auto c = io::parse_group(Json::parse(R"({"construct": "dihedral", "params": [4]})"));
  EXPECT_EQ(c.order(), 8u);
  EXPECT_EQ(error_name([] { io::parse_group(Json::parse(R"({"cayley": [[0, 1], [0, 1]]})")); }), "NotLatinSquare");
}

TEST(Io, RingRoundTrip) {
  const auto f2 = FiniteRing::zmod(2);
  for (const auto& r : {FiniteRing::zmod(4), FiniteRing::galois_field(4), FiniteRing::product(f2, f2)})
    EXPECT_EQ(io::parse_ring(io::ring_to_json(r)), r);
  const auto p = io::parse_ring(Json::parse(
      R"({"construct": "product", "factors": [{"construct": "Zn", "params": [2]}, {"construct": "Fq", "params": [4]}]})"));
  EXPECT_EQ(p.order(), 8u);
  EXPECT_EQ(error_name([] { io::parse_ring(Json::parse(R"({"add": [[0]]})")); }), "InvalidInput");
}

TEST(Io, FunctorGeneratorsAndRoundTrip) {
  const auto fp = io::parse_functor(fp_z4);
  EXPECT_EQ(fp->levels[1].order(), 4u);
  const auto coind = io::parse_functor(Json::parse(
      R"({"generator": "coind", "group": "C2", "subgroup": [0],
          "base": {"generator": "fp", "ring": {"construct": "Zn", "params": [2]}}})"));
  EXPECT_EQ(coind->levels[0].order(), 4u);
  const auto gh = io::parse_functor(Json{{"generator", "ghost"}, {"base", fp_z4}});
  EXPECT_EQ(gh->levels[1].order(), 8u);
  const auto swap = io::parse_functor(Json::parse(
      R"({"generator": "fp", "group": "C2", "ring": {"construct": "product", "factors":
          [{"construct": "Zn", "params": [2]}, {"construct": "Zn", "params": [2]}]},
          "action": [[0, 1, 2, 3], [0, 2, 1, 3]]})"));
  EXPECT_EQ(swap->levels[1].order(), 2u);
  for (const auto& f : {fp, coind, gh, swap}) {
    const auto back = io::parse_functor(io::functor_to_json(*f));
    EXPECT_EQ(back->levels, f->levels);
    EXPECT_EQ(back->res, f->res);
    EXPECT_EQ(back->tr, f->tr);
    EXPECT_EQ(back->nm, f->nm);
    EXPECT_EQ(back->conj, f->conj);
  }
}

TEST(Io, FunctorErrorsKeepTheirNames) {
  auto j = io::functor_to_json(*io::parse_functor(fp_z4));
  j["tr"][0]["map"] = {0, 0, 0, 0};
  EXPECT_EQ(error_name([&] { io::parse_functor(j); }), "AxiomViolation");
  EXPECT_EQ(error_name([] { io::parse_functor(Json::parse(R"({"generator": "twist"})")); }), "InvalidInput");
  EXPECT_EQ(error_name([] {
              io::parse_functor(Json{{"generator", "ghost"}, {"base", Json::parse(
                  R"({"generator": "fp", "group": "C4", "ring": {"construct": "Zn", "params": [2]}})")}});
            }),
            "NotCyclicPrime");
}

TEST(Io, FilesAndSyntax) {
  EXPECT_EQ(error_name([] { io::read_json_file("/nonexistent/x.json"); }), "InputError");
  const std::string path = ::testing::TempDir() + "bad.json";
  std::ofstream(path) << "{\"group\": [1, 2,\n";
  try {
    io::read_json_file(path);
    FAIL();
  } catch (const io::InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  std::remove(path.c_str());
}

TEST(Io, SpectrumRoundTrip) {
  const auto f = io::parse_functor(Json{{"generator", "ghost"}, {"base", fp_z4}});
  const auto s = spec_bruteforce(f);
  EXPECT_TRUE(io::same_spectrum(io::parse_spectrum(io::spectrum_to_json(s), f->lattice, f), s));
  const BurnsideFunctor a(make_lattice(FiniteGroup::cyclic(4)));
  const auto b = spec_burnside(a, default_prime_set(4));
  const auto back = io::parse_spectrum(io::spectrum_to_json(b), a.lattice_ptr());
  EXPECT_TRUE(io::same_spectrum(back, b));
  EXPECT_EQ(io::spectrum_to_json(back).dump(), io::spectrum_to_json(b).dump());
}

TEST(Io, DotForCyclicTwo) {
  const BurnsideFunctor a(make_lattice(FiniteGroup::cyclic(2)));
  const auto st = stratify_burnside(a, {0, 2, 3});
  const auto dot = io::render_spectrum_dot(st.spectrum, &st);
  const auto bottom = *find_point(st.spectrum, BurnsidePrimeSymbol{1, 0});
  std::size_t nodes = 0;
  for (std::size_t p = 0; p < st.spectrum.size(); ++p)
    nodes += dot.find("p" + std::to_string(p) + " [label=") != std::string::npos;
  EXPECT_EQ(nodes, 5u);
  // p{G,0} has nothing below it
  EXPECT_EQ(dot.find("-> p" + std::to_string(bottom) + ";"), std::string::npos);
  EXPECT_NE(dot.find("p" + std::to_string(bottom) + " -> "), std::string::npos);
  EXPECT_EQ(dot, io::render_spectrum_dot(stratify_burnside(a, {0, 2, 3}).spectrum, &st));
}

TEST(Io, SinglePointDot) {
  const auto f = io::parse_functor(fp_z4);
  const auto dot = io::render_spectrum_dot(spec_bruteforce(f));
  EXPECT_NE(dot.find("p0 [label=\"P1\"]"), std::string::npos);
  EXPECT_EQ(dot.find("->"), std::string::npos);
}

TEST(Io, TextTable) {
  const BurnsideFunctor a(make_lattice(FiniteGroup::cyclic(2)));
  const auto st = stratify_burnside(a, {0, 2, 3});
  const auto text = io::render_spectrum_text(st.spectrum, &st);
  EXPECT_EQ(text.rfind("5 points\n", 0), 0u);
  EXPECT_NE(text.find("stratum e: closed: yes"), std::string::npos);
  EXPECT_NE(text.find("open: no"), std::string::npos);
}

}  // namespace
}  // namespace nakaoka
