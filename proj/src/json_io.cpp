#include "facelex/json_io.hpp"

#include <algorithm>
#include <type_traits>

namespace facelex::json {

namespace {

template <class Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

void expect(bool ok, const std::string& message) {
  if (!ok) throw ParseError(message);
}

IndexSet index_set(const Json& j) {
  expect(j.is_array(), "vertex index list must be an array");
  IndexSet out;
  for (const auto& v : j) {
    expect(v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0),
           "vertex index must be a nonnegative integer");
    out.push_back(v.get<std::size_t>());
  }
  std::sort(out.begin(), out.end());
  expect(std::adjacent_find(out.begin(), out.end()) == out.end(), "repeated vertex index");
  return out;
}

Json index_array(const IndexSet& s) {
  Json a = Json::array();
  for (auto i : s) a.push_back(i);
  return a;
}

Json edge_ref(const EdgeRef& e) { return Json{{"i", e.i}, {"j", e.j}, {"side", e.side}}; }

EdgeRef edge_ref(const Json& j) {
  expect(j.is_object(), "edge must be an object");
  EdgeRef e{j.at("i").get<std::size_t>(), j.at("j").get<std::size_t>(), j.at("side").get<int>()};
  expect(e.i < e.j, "edge requires i < j");
  expect(e.side == 1 || e.side == -1, "edge side must be 1 or -1");
  return e;
}

}  // namespace

Json rational(const Rational& q) { return to_string(q); }

Rational rational(const Json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  expect(j.is_string(), "rational must be a string \"p/q\" or an integer");
  return parse_rational(j.get<std::string>());
}

Json point(const Point& p) {
  Json a = Json::array();
  for (const auto& c : p.coords()) a.push_back(rational(c));
  return a;
}

Point point(const Json& j) {
  expect(j.is_array(), "point must be an array of rationals");
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(rational(c));
  return Point(std::move(coords));
}

Json functional(const LinearFunctional& l) { return point(Point(l.coeffs())); }

LinearFunctional functional(const Json& j) { return LinearFunctional(point(j).coords()); }

Json affine(const AffineFunctional& f) { return Json{{"coeffs", functional(f.linear)}, {"offset", rational(f.offset)}}; }

AffineFunctional affine(const Json& j) {
  return guarded("affine functional", [&] {
    expect(j.is_object(), "affine functional must be an object");
    return AffineFunctional{functional(j.at("coeffs")), j.contains("offset") ? rational(j.at("offset")) : Rational(0)};
  });
}

Json cortege(const Cortege& c) {
  Json fs = Json::array();
  for (const auto& f : c.functionals()) fs.push_back(affine(f));
  return Json{{"functionals", fs}};
}

std::vector<AffineFunctional> cortege_functionals(const Json& j) {
  return guarded("cortege", [&] {
    expect(j.is_object() && j.contains("functionals"), "cortege must be {\"functionals\": [...]}");
    const auto& fs = j.at("functionals");
    expect(fs.is_array() && !fs.empty(), "cortege needs a nonempty functional list");
    std::vector<AffineFunctional> out;
    for (const auto& f : fs) out.push_back(affine(f));
    require_dim(out, out.front().dim(), "cortege functional");
    return out;
  });
}

Json polytope(const Polytope& p) {
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(point(v));
  return Json{{"ambient_dim", p.ambient_dim()}, {"vertices", vs}};
}

Polytope polytope(const Json& j) {
  return guarded("polytope", [&] {
    expect(j.is_object(), "polytope must be an object");
    const auto dim = j.at("ambient_dim").get<std::size_t>();
    const auto& vs = j.at("vertices");
    expect(vs.is_array() && !vs.empty(), "polytope needs a nonempty vertex list");
    std::vector<Point> pts;
    for (const auto& v : vs) pts.push_back(point(v));
    require_dim(pts, dim, "polytope vertex");
    return Polytope(std::move(pts));
  });
}

Json face(const FaceDescriptor& f) { return Json{{"vertex_indices", index_array(f.vertex_indices)}}; }

FaceDescriptor face(const Json& j) {
  return guarded("face", [&] {
    expect(j.is_object(), "face must be {\"vertex_indices\": [...]}");
    return FaceDescriptor{index_set(j.at("vertex_indices"))};
  });
}

Json facet(const Facet& f) {
  return Json{{"functional", functional(f.functional)},
              {"offset", rational(f.offset)},
              {"tight_vertices", index_array(f.tight_vertices)}};
}

Json certificate(const FaceCertificate& c) {
  Json chain = Json::array();
  for (const auto& link : c.chain) chain.push_back(index_array(link));
  return Json{{"chain", chain}, {"cortege", cortege(c.cortege)}};
}

std::vector<IndexSet> certificate_chain(const Json& j) {
  return guarded("certificate", [&] {
    expect(j.is_object() && j.contains("chain"), "certificate needs a chain");
    std::vector<IndexSet> chain;
    for (const auto& link : j.at("chain")) chain.push_back(index_set(link));
    return chain;
  });
}

Json not_a_face(const NotAFace& w) {
  return Json{{"not_a_face", Json{{"through", point(w.through)}, {"w", point(w.w)}, {"z", point(w.z)}}}};
}

Json preorder(const LexPreorder& r) {
  Json levels = Json::array();
  for (const auto& l : r.levels()) levels.push_back(functional(l));
  return Json{{"levels", levels}};
}

LexPreorder preorder(const Json& j) {
  return guarded("preorder", [&] {
    expect(j.is_object(), "preorder must be {\"levels\": [...]}");
    const auto& ls = j.at("levels");
    expect(ls.is_array() && !ls.empty(), "preorder needs a nonempty level list");
    std::vector<LinearFunctional> levels;
    for (const auto& l : ls) levels.push_back(functional(l));
    require_dim(levels, levels.front().dim(), "preorder level");
    return LexPreorder(std::move(levels));
  });
}

Json report(const EquivalenceReport& r) {
  auto leg = [](const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); };
  return Json{{"a", r.is_face},
              {"b", leg(r.semispace)},
              {"c", leg(r.preorder)},
              {"d", r.certified},
              {"consistent", r.consistent()},
              {"witness_valid", r.witness_valid}};
}

Json disk_body(const DiskBody& b) {
  Json disks = Json::array();
  for (const auto& d : b.disks()) disks.push_back(Json{{"center", point(d.center)}, {"radius", rational(d.radius)}});
  return Json{{"disks", disks}};
}

DiskBody disk_body(const Json& j) {
  return guarded("disk body", [&] {
    expect(j.is_object(), "disk body must be {\"disks\": [...]}");
    std::vector<Disk> disks;
    for (const auto& d : j.at("disks")) disks.push_back(Disk{point(d.at("center")), rational(d.at("radius"))});
    return DiskBody(std::move(disks));
  });
}

Json disk_face(const DiskFace& f) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, diskface::Whole>) {
          return Json{{"kind", "whole"}};
        } else if constexpr (std::is_same_v<T, diskface::Edge>) {
          return Json{{"kind", "edge"}, {"edge", edge_ref(v.edge)}};
        } else if constexpr (std::is_same_v<T, diskface::ArcPoint>) {
          return Json{{"kind", "arc_point"}, {"disk", v.disk}, {"direction", functional(v.direction)}};
        } else if constexpr (std::is_same_v<T, diskface::Apex>) {
          return Json{{"kind", "apex"}, {"disk", v.disk}};
        } else {
          return Json{{"kind", "tangency_point"}, {"edge", edge_ref(v.edge)}, {"end", v.end}};
        }
      },
      f);
}

DiskFace disk_face(const Json& j) {
  return guarded("disk face", [&]() -> DiskFace {
    expect(j.is_object() && j.contains("kind"), "disk face must be a tagged object");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "whole") return diskface::Whole{};
    if (kind == "edge") return diskface::Edge{edge_ref(j.at("edge"))};
    if (kind == "arc_point") return diskface::ArcPoint{j.at("disk").get<std::size_t>(), functional(j.at("direction"))};
    if (kind == "apex") return diskface::Apex{j.at("disk").get<std::size_t>()};
    if (kind == "tangency_point") return diskface::TangencyPoint{edge_ref(j.at("edge")), j.at("end").get<std::size_t>()};
    throw ParseError("unknown disk face kind \"" + kind + "\"");
  });
}

Json quad(const QuadScalar& q) {
  return Json{{"rational", rational(q.rational_part())},
              {"surd", rational(q.surd_part())},
              {"radicand", rational(q.radicand())}};
}

Json parse(const std::string& text) {
  return guarded("json", [&] { return Json::parse(text); });
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace facelex::json
