#include "facelex/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "facelex/batch.hpp"
#include "facelex/disk_hull.hpp"
#include "facelex/face_certify.hpp"
#include "facelex/json_io.hpp"
#include "facelex/lex_preorder.hpp"
#include "facelex/oracle.hpp"

namespace facelex::cli {

namespace {

using json::Json;

constexpr int kRefuteTrials = 2000;
constexpr std::size_t kDiskSamples = 500;

struct Options {
  std::string input;
  std::string face;
  std::string cortege;
  std::string preorder;
  std::string point;
  std::string certificate;
  std::string out;
  bool cross_check = false;
  bool certificates = false;
};

struct Outcome {
  Json document;
  int code = kOk;
  std::string diagnostic;  // reported on stderr when nonempty
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path, const char* flag) {
  if (path.empty()) throw ParseError(std::string("missing ") + flag);
  return json::parse(read_file(path));
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

// "--face 0,2" or a path to {"vertex_indices": [...]}.
FaceDescriptor read_face(const std::string& arg) {
  if (arg.empty()) throw ParseError("missing --face");
  if (std::all_of(arg.begin(), arg.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == ','; })) {
    Json indices = Json::array();
    for (const auto& part : split_commas(arg)) {
      if (part.empty()) throw ParseError("empty entry in --face list");
      indices.push_back(std::stoull(part));
    }
    return json::face(Json{{"vertex_indices", indices}});
  }
  return json::face(json::parse(read_file(arg)));
}

Point read_point(const std::string& arg) {
  if (arg.empty()) throw ParseError("missing --point");
  std::vector<Rational> coords;
  for (const auto& part : split_commas(arg)) coords.push_back(parse_rational(part));
  return Point(std::move(coords));
}

Json read_inline_or_file(const std::string& arg, const char* flag) {
  if (arg.empty()) throw ParseError(std::string("missing ") + flag);
  if (arg.front() == '{') return json::parse(arg);
  return json::parse(read_file(arg));
}

Cortege read_cortege(const std::string& path) {
  auto functionals = json::cortege_functionals(read_json(path, "--cortege"));
  return Cortege(std::move(functionals));
}

void mismatch(Outcome& o, const std::string& what) {
  o.code = kCrossCheck;
  o.diagnostic = "cross-check failed: " + what;
}

// ---- polytope commands ----

Outcome run_faces(const Options& opt) {
  const Polytope p = json::polytope(read_json(opt.input, "--input"));
  const auto faces = p.all_faces();
  Outcome o;
  Json list = Json::array();
  for (const auto& f : faces) list.push_back(json::face(f));
  Json facets = Json::array();
  for (const auto& f : p.facets()) facets.push_back(json::facet(f));
  o.document = Json{{"count", faces.size()},
                    {"faces", list},
                    {"facets", facets},
                    {"intrinsic_dim", p.intrinsic_dim()},
                    {"removed_points", p.removed().size()},
                    {"vertices", json::polytope(p).at("vertices")}};
  if (opt.certificates) {
    Json certs = Json::array();
    for (const auto& c : certify_faces(p, proper_faces(p))) {
      certs.push_back(Json{{"chain_certificate", json::certificate(c.chain)},
                           {"face", json::face(c.face)},
                           {"rank_one_certificate", json::certificate(c.rank_one)},
                           {"verified", c.rank_one_verdict.accepted && c.chain_verdict.accepted}});
    }
    o.document["certificates"] = certs;
  }
  if (opt.cross_check && oracle_faces(p) != faces) mismatch(o, "face oracle disagrees with facet intersections");
  return o;
}

Outcome run_certify(const Options& opt) {
  const Polytope p = json::polytope(read_json(opt.input, "--input"));
  const FaceDescriptor s = read_face(opt.face);
  const auto result = certify(p, s);
  Outcome o;
  if (const auto* cert = std::get_if<FaceCertificate>(&result)) {
    o.document = json::certificate(*cert);
    if (opt.cross_check) {
      if (!verify_certificate(p, s, *cert)) mismatch(o, "certificate rejected by the verifier");
      if (oracle_refute_face(p, s, kRefuteTrials)) mismatch(o, "random refuter found a witness against a face");
    }
  } else {
    const auto& witness = std::get<NotAFace>(result);
    o.document = json::not_a_face(witness);
    o.code = kNegative;
    if (opt.cross_check && (!witness_is_valid(p, s, witness) || p.is_face(s))) mismatch(o, "invalid witness");
  }
  return o;
}

Outcome run_chain(const Options& opt) {
  const Polytope p = json::polytope(read_json(opt.input, "--input"));
  const FaceDescriptor s = read_face(opt.face);
  if (!p.is_face(s)) {
    Outcome o;
    o.document = json::not_a_face(std::get<NotAFace>(certify(p, s)));
    o.code = kNegative;
    return o;
  }
  const auto cert = chain_certificate(p, s);
  Outcome o;
  o.document = json::certificate(cert);
  if (opt.cross_check && !verify_certificate(p, s, cert)) mismatch(o, "chain certificate rejected by the verifier");
  return o;
}

Outcome run_verify(const Options& opt) {
  const Polytope p = json::polytope(read_json(opt.input, "--input"));
  const FaceDescriptor s = read_face(opt.face);
  const Json doc = read_json(opt.certificate, "--certificate");
  const auto functionals = json::cortege_functionals(doc.contains("cortege") ? doc.at("cortege") : Json());
  const Verdict v = verify_certificate(p, s, functionals, json::certificate_chain(doc));
  Outcome o;
  o.document = Json{{"accepted", v.accepted}};
  if (!v.accepted) {
    o.document["condition"] = v.condition;
    o.document["detail"] = v.detail;
    o.code = kNegative;
  }
  return o;
}

Outcome run_lexmin(const Options& opt) {
  const Polytope p = json::polytope(read_json(opt.input, "--input"));
  const LexPreorder order = json::preorder(read_json(opt.preorder, "--preorder"));
  const FaceDescriptor f = min_set(p, order);
  Outcome o;
  o.document = json::face(f);
  if (opt.cross_check) {
    if (oracle_lex_argmin(p, order.levels()) != f) mismatch(o, "tuple argmin disagrees with sequential argmin");
    if (!p.is_face(f)) mismatch(o, "minimal set is not a face");
  }
  return o;
}

const char* region_name(Region r) {
  switch (r) {
    case Region::NegativeSide: return "negative";
    case Region::ZeroManifold: return "zero";
    case Region::PositiveSide: return "positive";
  }
  return "";
}

Outcome run_eval(const Options& opt, bool with_region) {
  const StepAffineFunction u(read_cortege(opt.cortege));
  const Point x = read_point(opt.point);
  if (x.dim() != u.dim()) throw DimensionMismatch("point and cortege dimensions differ");
  const Rational value = u.eval(x);
  Outcome o;
  o.document = Json{{"value", json::rational(value)}};
  if (with_region) o.document["region"] = region_name(u.classify(x));
  if (opt.cross_check && u.eval_by_least_nonvanishing(x) != value) mismatch(o, "step evaluators disagree");
  return o;
}

Outcome run_equivalence(const Options& opt) {
  const Polytope p = json::polytope(read_json(opt.input, "--input"));
  const FaceDescriptor s = read_face(opt.face);
  const auto report = equivalence_report(p, s);
  Outcome o;
  o.document = json::report(report);
  if (!report.consistent()) {
    mismatch(o, "characterizations disagree");
  } else if (!report.is_face) {
    o.code = kNegative;
  }
  if (opt.cross_check && report.is_face && oracle_refute_face(p, s, kRefuteTrials)) {
    mismatch(o, "random refuter found a witness against a face");
  }
  return o;
}

// ---- disk hull commands ----

Outcome run_diskhull_faces(const Options& opt) {
  const DiskBody body = json::disk_body(read_json(opt.input, "--input"));
  const auto list = dh_faces(body);
  Json faces = Json::array();
  for (const auto& f : list.faces) {
    Json entry = json::disk_face(f);
    if (!std::holds_alternative<diskface::Whole>(f)) entry["exposed"] = dh_is_exposed(body, f);
    if (auto pt = face_point(body, f)) entry["point"] = json::point(*pt);
    faces.push_back(std::move(entry));
  }
  Json edges = Json::array();
  for (const auto& e : hull_edges(body)) {
    edges.push_back(Json{{"edge", json::disk_face(diskface::Edge{e.ref}).at("edge")},
                         {"ends", Json::array({json::point(e.end_i), json::point(e.end_j)})},
                         {"normal", json::functional(e.normal)},
                         {"level", json::rational(e.level)}});
  }
  Json arcs = Json::array();
  for (const auto& a : list.arcs) {
    Json entry{{"disk", a.disk}};
    if (a.bounds) {
      entry["between_normals"] = Json::array({json::functional(a.bounds->first), json::functional(a.bounds->second)});
    } else {
      entry["full_circle"] = true;
    }
    arcs.push_back(std::move(entry));
  }
  Outcome o;
  o.document = Json{{"arcs", arcs}, {"edges", edges}, {"faces", faces}};
  if (opt.cross_check) {
    for (const auto& e : hull_edges(body)) {
      const auto found = dh_support_min(body, e.normal);
      const auto* edge = std::get_if<diskface::Edge>(&found.face);
      if (!edge || !(edge->edge == e.ref)) mismatch(o, "edge normal does not expose its edge");
    }
  }
  return o;
}

Outcome run_diskhull_certify(const Options& opt) {
  const DiskBody body = json::disk_body(read_json(opt.input, "--input"));
  const DiskFace face = json::disk_face(read_inline_or_file(opt.face, "--face"));
  const Cortege c = dh_certify(body, face);
  Outcome o;
  o.document = Json{{"cortege", json::cortege(c)}, {"exposed", dh_is_exposed(body, face)}, {"rank", c.size()}};
  if (opt.cross_check) {
    const StepAffineFunction u(c);
    Sampler sampler;
    for (const auto& x : sample_body(body, sampler, kDiskSamples)) {
      const int s = sgn(u.eval(x));
      if (s < 0) mismatch(o, "certificate negative on the body");
      if (s == 0 && !face_contains(body, face, x)) mismatch(o, "certificate vanishes off the face");
    }
  }
  return o;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact face certificates for polytopes and disk hulls", "facelex"};
  app.require_subcommand(1, 1);
  Options opt;

  auto add = [&](const std::string& name, const std::string& help) { return app.add_subcommand(name, help); };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out, "Write the JSON result to this file instead of stdout");
    sub->add_flag("--cross-check", opt.cross_check, "Also run the independent oracle and fail on disagreement");
  };
  auto body = [&](CLI::App* sub) { sub->add_option("--input", opt.input, "Body JSON file")->required(); };

  auto* faces = add("faces", "List all nonempty faces and facets of a polytope");
  body(faces);
  faces->add_flag("--certificates", opt.certificates, "Certify every proper face");
  auto* certify_cmd = add("certify", "Rank-1 certificate or a not-a-face witness");
  auto* chain = add("chain", "Nested (lexicographic) certificate for a face");
  auto* equivalence = add("equivalence", "Check the four face characterizations against each other");
  for (auto* sub : {certify_cmd, chain, equivalence}) {
    body(sub);
    sub->add_option("--face", opt.face, "Vertex indices \"0,2\" or a face JSON file")->required();
  }
  auto* verify = add("verify", "Verify a certificate JSON file");
  body(verify);
  verify->add_option("--face", opt.face, "Vertex indices \"0,2\" or a face JSON file")->required();
  verify->add_option("--certificate", opt.certificate, "Certificate JSON file")->required();
  auto* lexmin = add("lexmin", "Minimal vertex set of a polytope under a lexicographic preorder");
  body(lexmin);
  lexmin->add_option("--preorder", opt.preorder, "Preorder JSON file")->required();
  auto* eval = add("eval", "Evaluate a step-affine function");
  auto* classify = add("classify", "Sign region of a point for a step-affine function");
  for (auto* sub : {eval, classify}) {
    sub->add_option("--input", opt.input, "Ignored; accepted for uniformity");
    sub->add_option("--cortege", opt.cortege, "Cortege JSON file")->required();
    sub->add_option("--point", opt.point, "Comma-separated rationals, e.g. 1/2,0")->required();
  }
  auto* dh_faces_cmd = add("diskhull-faces", "Faces of a hull of disks");
  body(dh_faces_cmd);
  auto* dh_certify_cmd = add("diskhull-certify", "Certificate for a face of a hull of disks");
  body(dh_certify_cmd);
  dh_certify_cmd->add_option("--face", opt.face, "Disk face JSON (inline or file)")->required();
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) common(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "facelex: " << e.what() << "\n";
    return kUsage;
  }

  Outcome result;
  try {
    if (faces->parsed()) result = run_faces(opt);
    else if (certify_cmd->parsed()) result = run_certify(opt);
    else if (chain->parsed()) result = run_chain(opt);
    else if (verify->parsed()) result = run_verify(opt);
    else if (lexmin->parsed()) result = run_lexmin(opt);
    else if (eval->parsed()) result = run_eval(opt, false);
    else if (classify->parsed()) result = run_eval(opt, true);
    else if (equivalence->parsed()) result = run_equivalence(opt);
    else if (dh_faces_cmd->parsed()) result = run_diskhull_faces(opt);
    else result = run_diskhull_certify(opt);
  } catch (const std::exception& e) {
    err << "facelex: " << e.what() << "\n";
    return kUsage;
  }

  const std::string text = json::dump(result.document);
  if (opt.out.empty()) {
    out << text;
  } else {
    std::ofstream file(opt.out);
    if (!file) {
      err << "facelex: cannot write \"" << opt.out << "\"\n";
      return kUsage;
    }
    file << text;
  }
  if (!result.diagnostic.empty()) err << "facelex: " << result.diagnostic << "\n";
  return result.code;
}

}  // namespace facelex::cli
