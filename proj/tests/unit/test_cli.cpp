#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

#include "../support/oracles.hpp"
#include "sixsplit/cli/commands.hpp"
#include "sixsplit/cli/json_io.hpp"
#include "sixsplit/cli/svg.hpp"

namespace {

using namespace sixsplit::cli;
using sixsplit::certify::SixPoints;
using sixsplit::cp1::Complex;
using sixsplit::cp1::GeneralizedDisc;
using sixsplit::cp1::SpherePoint;

const char* kWorked =
    R"({"points":[{"re":0,"im":0},{"re":1,"im":0},{"re":2,"im":0},{"re":3,"im":0},)"
    R"({"re":4,"im":0},{"inf":true}]})";

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

template <class Args, class Fn>
Outcome run(Fn fn, const Args& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = fn(args, Streams{in, out, err});
  return {code, out.str(), err.str()};
}

Outcome split(const std::string& input) { return run(cmd_split, SplitArgs{}, input); }
Outcome verify(const std::string& input) { return run(cmd_verify, VerifyArgs{}, input); }
Outcome render(const std::string& input, const std::string& view) {
  RenderArgs a;
  a.view = view;
  return run(cmd_render, a, input);
}

std::string points_document(const SixPoints& p) {
  json pts = json::array();
  for (const auto& q : p) pts.push_back(point_to_json(q));
  return json{{"points", pts}}.dump();
}

SixPoints random_points(std::mt19937_64& rng) {
  SixPoints p{SpherePoint::infinity(), SpherePoint::infinity(), SpherePoint::infinity(),
              SpherePoint::infinity(), SpherePoint::infinity(), SpherePoint::infinity()};
  for (auto& q : p) q = SpherePoint::finite(sixsplit::testing::uniform_sphere_point(rng));
  return p;
}

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (std::size_t at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
  return n;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + "sixsplit_" + name;
  std::ofstream(path) << content;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

int tool(const std::string& args) {
  const int status = std::system((std::string(SIXSPLIT_TOOL) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Split, WorkedExample) {
  const Outcome r = split(kWorked);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc.at("pairing"), json::parse("[[0,1],[2,3],[4,5]]"));
  EXPECT_GT(doc.at("margin").get<double>(), 0.0);
  ASSERT_EQ(doc.at("discs").size(), 3u);
  for (const auto& d : doc.at("discs")) {
    EXPECT_TRUE(d.contains("cap"));
    EXPECT_TRUE(d.contains("plane"));
    EXPECT_FALSE(disc_forms_disagree(d));
  }
  EXPECT_EQ(doc.at("version"), kVersion);
}

TEST(Split, MalformedJson) {
  const Outcome r = split("{\"points\": [");
  EXPECT_EQ(r.code, kExitInvalidInput);
  EXPECT_FALSE(r.err.empty());
}

TEST(Split, DuplicatePoints) {
  const Outcome r = split(
      R"({"points":[{"re":0,"im":0},{"re":1,"im":0},{"re":0,"im":0},{"re":3,"im":0},)"
      R"({"re":4,"im":0},{"inf":true}]})");
  EXPECT_EQ(r.code, kExitInvalidInput);
  EXPECT_NE(r.err.find("duplicate"), std::string::npos);
}

TEST(Split, WrongPointCountAndNonNumeric) {
  EXPECT_EQ(split(R"({"points":[{"re":0,"im":0}]})").code, kExitInvalidInput);
  EXPECT_EQ(split(R"({"points":[{"re":"a","im":0},{"re":1,"im":0},{"re":2,"im":0},)"
                  R"({"re":3,"im":0},{"re":4,"im":0},{"inf":true}]})")
                .code,
            kExitInvalidInput);
  EXPECT_EQ(split(R"({"pts":[]})").code, kExitInvalidInput);
}

TEST(Verify, SplitOutputPipedBack) {
  const Outcome s = split(kWorked);
  ASSERT_EQ(s.code, kExitOk);
  const Outcome v = verify(s.out);
  EXPECT_EQ(v.code, kExitOk) << v.out << v.err;
  const json cert = json::parse(v.out);
  EXPECT_TRUE(cert.at("pass").get<bool>());
  EXPECT_GT(cert.at("margin").get<double>(), 0.0);
}

TEST(Verify, TamperedRadiusConsistentForms) {
  json doc = json::parse(split(kWorked).out);
  GeneralizedDisc d = disc_from_json(doc.at("discs")[0]);
  auto cap = sixsplit::cp1::disc_to_cap(d);
  cap.angular_radius *= 1.8;
  doc.at("discs")[0] = disc_to_json(sixsplit::cp1::cap_to_disc(cap));
  const Outcome v = verify(doc.dump());
  EXPECT_EQ(v.code, kExitVerifyFailed);
  EXPECT_FALSE(json::parse(v.out).at("pass").get<bool>());
}

TEST(Verify, TamperedRadiusCapOnly) {
  json doc = json::parse(split(kWorked).out);
  doc.at("discs")[1].at("cap").at("angular_radius") =
      doc.at("discs")[1].at("cap").at("angular_radius").get<double>() * 1.8;
  EXPECT_EQ(verify(doc.dump()).code, kExitVerifyFailed);
}

TEST(Verify, TamperedPlaneRadiusOnly) {
  json doc = json::parse(split(kWorked).out);
  json& plane = doc.at("discs")[0].at("plane");
  ASSERT_EQ(plane.at("kind"), "disk");
  plane.at("radius") = plane.at("radius").get<double>() * 3.0;
  EXPECT_EQ(verify(doc.dump()).code, kExitVerifyFailed);
}

TEST(Verify, MissingDiscField) {
  const json good = json::parse(split(kWorked).out);
  json no_discs = good;
  no_discs.erase("discs");
  EXPECT_EQ(verify(no_discs.dump()).code, kExitInvalidInput);

  json empty_disc = good;
  empty_disc.at("discs")[2] = json::object();
  EXPECT_EQ(verify(empty_disc.dump()).code, kExitInvalidInput);

  json no_radius = good;
  no_radius.at("discs")[0].erase("cap");
  no_radius.at("discs")[0].at("plane").erase("radius");
  EXPECT_EQ(verify(no_radius.dump()).code, kExitInvalidInput);

  json no_pairing = good;
  no_pairing.erase("pairing");
  EXPECT_EQ(verify(no_pairing.dump()).code, kExitInvalidInput);

  json two_discs = good;
  two_discs.at("discs").erase(2);
  EXPECT_EQ(verify(two_discs.dump()).code, kExitInvalidInput);
}

TEST(Verify, PlaneOnlyDiscsAreAccepted) {
  json doc = json::parse(split(kWorked).out);
  for (auto& d : doc.at("discs")) d.erase("cap");
  EXPECT_EQ(verify(doc.dump()).code, kExitOk);
}

TEST(Verify, MalformedJson) { EXPECT_EQ(verify("not json").code, kExitInvalidInput); }

TEST(RoundTrip, SplitThenVerifyOnSeededInputs) {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 1000; ++k) {
    const std::string input = points_document(random_points(rng));
    const Outcome s = split(input);
    ASSERT_EQ(s.code, kExitOk) << input << "\n" << s.err;
    const Outcome v = verify(s.out);
    ASSERT_EQ(v.code, kExitOk) << s.out << "\n" << v.out;
  }
}

TEST(RoundTrip, PointsSurviveSerialization) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const SixPoints p = random_points(rng);
    const SixPoints q = points_from_document(json::parse(points_document(p)));
    for (int i = 0; i < 6; ++i) EXPECT_EQ(p[i], q[i]);
  }
}

TEST(DualForm, CapAndPlaneMembershipAgree) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> kind(0, 2);
  int compared = 0;
  for (int k = 0; k < 1000; ++k) {
    GeneralizedDisc d;
    const Complex c(3.0 * u(rng), 3.0 * u(rng));
    const double r = 0.05 + 2.0 * (u(rng) + 1.0);
    switch (kind(rng)) {
      case 0: d = GeneralizedDisc::disk(c, r); break;
      case 1: d = GeneralizedDisc::codisk(c, r); break;
      default: d = GeneralizedDisc::half_plane(c, 2.0 * u(rng)); break;
    }
    const json j = json::parse(disc_to_json(d).dump());
    const GeneralizedDisc from_cap = disc_from_json(json{{"cap", j.at("cap")}});
    const GeneralizedDisc from_plane = disc_from_json(json{{"plane", j.at("plane")}});
    for (int s = 0; s < 100; ++s) {
      const SpherePoint p = SpherePoint::finite(sixsplit::testing::uniform_sphere_point(rng));
      const auto a = sixsplit::cp1::disc_contains(from_cap, p);
      const auto b = sixsplit::cp1::disc_contains(from_plane, p);
      if (std::abs(a.signed_value) < 1e-9 || std::abs(b.signed_value) < 1e-9) continue;
      ++compared;
      ASSERT_EQ(a.signed_value < 0.0, b.signed_value < 0.0) << j.dump();
    }
    EXPECT_EQ(sixsplit::cp1::disc_contains(from_cap, SpherePoint::infinity()).location ==
                  sixsplit::cp1::Location::Inside,
              d.A() < 0.0)
        << j.dump();
  }
  EXPECT_GT(compared, 99000);
}

TEST(DualForm, KindsAreEncodedDistinctly) {
  EXPECT_EQ(disc_to_json(GeneralizedDisc::disk(1.0, 2.0)).at("plane").at("kind"), "disk");
  EXPECT_EQ(disc_to_json(GeneralizedDisc::codisk(1.0, 2.0)).at("plane").at("kind"), "codisk");
  const json h = disc_to_json(GeneralizedDisc::half_plane(Complex(0.0, 2.0), 1.0)).at("plane");
  EXPECT_EQ(h.at("kind"), "halfplane");
  EXPECT_NEAR(h.at("normal").at("im").get<double>(), 1.0, 1e-15);
  EXPECT_NEAR(h.at("offset").get<double>(), 0.5, 1e-15);
}

TEST(Render, SplitOutputHasThreeDisjointShapes) {
  const std::string doc = split(kWorked).out;
  const Outcome r = render(doc, "plane");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(count(r.out, "fill-opacity=\"0.18\""), 3);
  EXPECT_EQ(count(r.out, "width=\"1000\" height=\"1000\""), 2);
  const json j = json::parse(doc);
  std::array<GeneralizedDisc, 3> d;
  for (int k = 0; k < 3; ++k) d[k] = disc_from_json(j.at("discs")[k]);
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) EXPECT_TRUE(sixsplit::cp1::discs_disjoint(d[a], d[b]).disjoint);
  }
  // The two bounded discs are drawn as circles that do not meet on the canvas.
  const std::regex circle(R"re(<circle cx="([-0-9.]+)" cy="([-0-9.]+)" r="([0-9.]+)" fill="#[0-9a-f]+" fill-opacity)re");
  std::vector<std::array<double, 3>> shapes;
  for (auto it = std::sregex_iterator(r.out.begin(), r.out.end(), circle); it != std::sregex_iterator(); ++it) {
    shapes.push_back({std::stod((*it)[1]), std::stod((*it)[2]), std::stod((*it)[3])});
  }
  ASSERT_EQ(shapes.size(), 2u);
  EXPECT_GT(std::hypot(shapes[0][0] - shapes[1][0], shapes[0][1] - shapes[1][1]), shapes[0][2] + shapes[1][2]);
  for (const char* color : {"#d62728", "#1f77b4", "#2ca02c"}) {
    EXPECT_GE(count(r.out, std::string("fill=\"") + color + "\""), 2) << color;
  }
}

TEST(Render, PointsOnlyDrawsPointsAndOutline) {
  const Outcome r = render(kWorked, "plane");
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(count(r.out, "fill-opacity"), 0);
  EXPECT_EQ(count(r.out, "r=\"5\" fill=\"#444444\""), 5);
  EXPECT_NE(r.out.find("at infinity"), std::string::npos);
  EXPECT_GE(count(r.out, "<polyline"), 2);
  EXPECT_EQ(count(r.out, "stroke-dasharray"), count(r.out, "<polyline") + 1);
}

TEST(Render, SphereView) {
  const Outcome r = render(split(kWorked).out, "sphere");
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("<svg"), std::string::npos);
  EXPECT_NE(r.out.find("</svg>"), std::string::npos);
}

TEST(Render, BadViewAndBadInput) {
  EXPECT_EQ(render(kWorked, "isometric").code, kExitInvalidInput);
  EXPECT_EQ(render("[1,2", "plane").code, kExitInvalidInput);
}

TEST(Render, ByteDeterministic) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 20; ++k) {
    const std::string doc = split(points_document(random_points(rng))).out;
    for (const char* view : {"plane", "sphere"}) {
      EXPECT_EQ(render(doc, view).out, render(doc, view).out);
    }
  }
}

TEST(Fuzz, ZeroTrialsRejected) {
  FuzzArgs a;
  a.trials = 0;
  EXPECT_EQ(run(cmd_fuzz, a).code, kExitInvalidInput);
  a.trials = 10;
  a.sampler = "gaussian";
  EXPECT_EQ(run(cmd_fuzz, a).code, kExitInvalidInput);
}

TEST(Fuzz, ThousandTrialsSeed42) {
  FuzzArgs a;
  a.trials = 1000;
  a.seed = 42;
  const Outcome r = run(cmd_fuzz, a);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json rep = json::parse(r.out);
  EXPECT_EQ(rep.at("successes").get<std::uint64_t>(), 1000u);
  EXPECT_EQ(rep.at("failures").size(), 0u);
  EXPECT_EQ(run(cmd_fuzz, a).out, r.out);
}

TEST(Tool, ExitCodes) {
  const std::string dir = ::testing::TempDir();
  const std::string in = temp_file("in.json", kWorked);
  const std::string out = dir + "sixsplit_out.json";
  EXPECT_EQ(tool("split -i " + in + " -o " + out), 0);
  EXPECT_EQ(tool("verify -i " + out), 0);
  json tampered = json::parse(slurp(out));
  tampered.at("discs")[0].at("cap").at("angular_radius") = 1.5;
  tampered.at("discs")[0].erase("plane");
  EXPECT_EQ(tool("verify -i " + temp_file("tampered.json", tampered.dump())), 2);
  EXPECT_EQ(tool("split -i " + temp_file("bad.json", "{")), 3);
  EXPECT_EQ(tool("split -i " + dir + "sixsplit_does_not_exist.json"), 3);
  EXPECT_EQ(tool("fuzz --trials 0"), 3);
  EXPECT_EQ(tool("fuzz --bogus"), 3);
  EXPECT_EQ(tool("render -i " + in + " -o " + dir + "sixsplit.svg --view cube"), 3);
  EXPECT_EQ(tool("render -i " + out + " -o " + dir + "sixsplit.svg"), 0);
  EXPECT_EQ(tool("--help"), 0);
  EXPECT_EQ(tool(""), 3);
}

TEST(Tool, FuzzReportFileIsByteIdentical) {
  const std::string a = ::testing::TempDir() + "sixsplit_rep_a.json";
  const std::string b = ::testing::TempDir() + "sixsplit_rep_b.json";
  ASSERT_EQ(tool("fuzz -n 300 -s 9 --sampler clustered -r " + a), 0);
  ASSERT_EQ(tool("fuzz -n 300 -s 9 --sampler clustered -r " + b), 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
}

}  // namespace
