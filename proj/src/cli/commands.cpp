#include "sixsplit/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "sixsplit/cli/json_io.hpp"
#include "sixsplit/cli/svg.hpp"

namespace sixsplit::cli {

namespace {

bool is_std_stream(const std::string& path) { return path.empty() || path == "-"; }

std::string read_input(const std::string& path, std::istream& in) {
  if (is_std_stream(path)) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open input file " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, std::ostream& out, const std::string& text) {
  if (is_std_stream(path)) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open output file " + path);
  file << text;
  if (!file) throw InputError("failed writing " + path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

double checked_tolerance(double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw InputError("tolerance must be a finite nonnegative number");
  return eps;
}

}  // namespace

int cmd_split(const SplitArgs& args, const Streams& io) {
  certify::SixPoints points{cp1::SpherePoint::infinity(), cp1::SpherePoint::infinity(),
                            cp1::SpherePoint::infinity(), cp1::SpherePoint::infinity(),
                            cp1::SpherePoint::infinity(), cp1::SpherePoint::infinity()};
  split::SplitOptions options;
  try {
    const json doc = parse_document(read_input(args.input, io.in));
    points = points_from_document(doc);
    if (const auto eps = epsilon_from_document(doc)) options.epsilon = *eps;
    if (args.tolerance) options.epsilon = checked_tolerance(*args.tolerance);
  } catch (const std::invalid_argument& ex) {
    io.err << "invalid input: " << ex.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    const split::CertifiedSplit s = split::split_six(points, options);
    write_output(args.output, io.out, dump(split_to_json(points, s)));
    return kExitOk;
  } catch (const split::ExhaustedError& ex) {
    json pts = json::array();
    for (const auto& p : points) pts.push_back(point_to_json(p));
    const json report = {{"version", kVersion},
                         {"status", "exhausted"},
                         {"message", ex.what()},
                         {"points", pts},
                         {"epsilon", options.epsilon},
                         {"transcript", ex.transcript()}};
    io.err << "no construction certified; every six-point set should split, "
              "please file the bug report written to the output\n";
    try {
      write_output(args.output, io.out, dump(report));
    } catch (const std::exception& wex) {
      io.err << wex.what() << "\n" << dump(report);
    }
    return kExitExhausted;
  } catch (const std::invalid_argument& ex) {
    io.err << "invalid input: " << ex.what() << "\n";
    return kExitInvalidInput;
  }
}

int cmd_verify(const VerifyArgs& args, const Streams& io) {
  try {
    const json doc = parse_document(read_input(args.input, io.in));
    const certify::SixPoints points = points_from_document(doc);
    double eps = certify::kDefaultEpsilon;
    if (const auto e = epsilon_from_document(doc)) eps = *e;
    if (args.tolerance) eps = checked_tolerance(*args.tolerance);
    if (!doc.contains("discs") || !doc.at("discs").is_array() || doc.at("discs").size() != 3) {
      throw InputError("document needs a \"discs\" array of three discs");
    }
    if (!doc.contains("pairing")) throw InputError("document needs a \"pairing\"");
    const certify::Pairing pairing = pairing_from_json(doc.at("pairing"));
    std::array<cp1::GeneralizedDisc, 3> discs;
    bool forms_disagree = false;
    for (int j = 0; j < 3; ++j) {
      const json& d = doc.at("discs")[j];
      discs[j] = disc_from_json(d);
      forms_disagree = forms_disagree || disc_forms_disagree(d);
    }
    const certify::Certificate cert = certify::verify_split(points, discs, pairing, eps);
    json out = certificate_to_json(cert);
    if (forms_disagree) {
      out["pass"] = false;
      out["violations"].push_back("cap and plane forms of a disc disagree");
    }
    io.out << dump(out);
    io.out.flush();
    return cert.pass && !forms_disagree ? kExitOk : kExitVerifyFailed;
  } catch (const std::invalid_argument& ex) {
    io.err << "invalid input: " << ex.what() << "\n";
    return kExitInvalidInput;
  }
}

int cmd_fuzz(const FuzzArgs& args, const Streams& io) {
  certify::Sampler sampler{};
  try {
    if (args.trials < 1) throw InputError("--trials must be at least 1");
    sampler = certify::parse_sampler(args.sampler);
  } catch (const std::invalid_argument& ex) {
    io.err << "bad flags: " << ex.what() << "\n";
    return kExitInvalidInput;
  }
  const certify::FuzzReport report =
      certify::fuzz_campaign(static_cast<std::uint64_t>(args.trials), args.seed, sampler);
  try {
    write_output(args.report, io.out, dump(report_to_json(report)));
  } catch (const std::invalid_argument& ex) {
    io.err << ex.what() << "\n";
    return kExitInvalidInput;
  }
  if (!report.failures.empty()) {
    io.err << report.failures.size() << " of " << report.trials << " trials failed\n";
    return kExitExhausted;
  }
  return kExitOk;
}

int cmd_render(const RenderArgs& args, const Streams& io) {
  try {
    const View view = parse_view(args.view);
    const json doc = parse_document(read_input(args.input, io.in));
    Scene scene{points_from_document(doc), std::nullopt, std::nullopt};
    if (doc.contains("discs")) {
      const json& arr = doc.at("discs");
      if (!arr.is_array() || arr.size() != 3) throw InputError("\"discs\" must hold three discs");
      std::array<cp1::GeneralizedDisc, 3> discs;
      for (int j = 0; j < 3; ++j) discs[j] = disc_from_json(arr[j]);
      scene.discs = discs;
    }
    if (doc.contains("pairing")) scene.pairing = pairing_from_json(doc.at("pairing"));
    write_output(args.output, io.out, render_svg(scene, view));
    return kExitOk;
  } catch (const std::invalid_argument& ex) {
    io.err << "invalid input: " << ex.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace sixsplit::cli
