#include <polyadj/error.hpp>
#include <polyadj/io.hpp>

#include <limits>

namespace polyadj::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

void expect_format(const Json& j, const char* format) {
  const Json& f = field(j, "format");
  if (!f.is_string() || f.get<std::string>() != format) fail(std::string("expected format ") + format);
}

std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) fail(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

template <typename T, typename F>
std::vector<T> array_of(const Json& j, const char* what, F&& convert) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<T> out;
  for (const auto& e : j) out.push_back(convert(e));
  return out;
}

IntVector int_vector(const Json& j) { return array_of<Integer>(j, "integer vector", integer_from_json); }
RatVector rat_vector(const Json& j) { return array_of<Rational>(j, "rational vector", rational_from_json); }

Json vector_json(std::span<const Integer> v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

// Vertex coordinates: integers where integral.
Json coordinate_json(const Rational& q) { return q.get_den() == 1 ? to_json(q.get_num()) : to_json(q); }

}  // namespace

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json to_json(const Rational& q) { return polyadj::to_string(q); }

Json to_json(const AffineUnimodularMap& map) {
  Json m = Json::array();
  for (const auto& row : map.matrix) m.push_back(vector_json(row));
  return Json{{"matrix", m}, {"translation", vector_json(map.translation)}};
}

Json to_json(const Polytope& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices()) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(coordinate_json(x));
    verts.push_back(std::move(row));
  }
  return Json{{"format", "polytope.v1"}, {"ambient_dim", p.ambient_dim()}, {"vertices", verts}};
}

Json to_json(const CayleySpec& spec) {
  Json factors = Json::array();
  for (const auto& f : spec.factors) factors.push_back(to_json(f));
  return Json{{"format", "cayley.v1"}, {"s", spec.s}, {"factors", factors}};
}

Json to_json(const Fan& fan) {
  Json rays = Json::array();
  for (const auto& r : fan.rays) rays.push_back(vector_json(r));
  return Json{{"format", "fan.v1"}, {"rays", rays}, {"maximal_cones", fan.maximal_cones}};
}

Json to_json(const FanDivisor& d) {
  Json j = to_json(d.fan);
  Json c = Json::array();
  for (const auto& a : d.coefficients) c.push_back(coordinate_json(a));
  j["coefficients"] = c;
  return j;
}

Json to_json(const ClassificationVerdict& v) {
  Json witness = nullptr;
  if (v.cayley) {
    witness = Json{{"cayley", to_json(v.cayley->spec)}, {"map", to_json(v.cayley->map)}};
  } else if (v.map) {
    witness = Json{{"map", to_json(*v.map)}};
    if (v.segment_length) witness["segment_length"] = to_json(*v.segment_length);
  }
  return Json{{"tag", std::string(to_string(v.tag))}, {"witness", witness}, {"failed", v.failed}};
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    Rational q = parse_rational(j.get<std::string>());
    if (q.get_den() != 1) fail("expected an integer, got " + j.get<std::string>());
    return q.get_num();
  }
  fail("expected an integer");
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  return Rational(integer_from_json(j));
}

Polytope polytope_from_json(const Json& j) {
  expect_format(j, "polytope.v1");
  const std::size_t n = size_from_json(field(j, "ambient_dim"), "ambient_dim");
  const bool has_v = j.contains("vertices"), has_f = j.contains("facets");
  if (has_v == has_f) fail("polytope.v1 needs exactly one of \"vertices\" and \"facets\"");
  auto check_len = [&](std::size_t len) {
    if (len != n) throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient_dim");
  };
  if (has_v) {
    auto pts = array_of<RatVector>(j["vertices"], "vertices", rat_vector);
    if (pts.empty()) return Polytope::empty(n);
    for (const auto& p : pts) check_len(p.size());
    return Polytope::hull(n, std::move(pts));
  }
  const Json& f = j["facets"];
  FacetPresentation sys;
  sys.normals = array_of<IntVector>(field(f, "normals"), "normals", int_vector);
  sys.offsets = rat_vector(field(f, "offsets"));
  if (sys.normals.size() != sys.offsets.size()) fail("normals and offsets differ in length");
  for (const auto& nm : sys.normals) check_len(nm.size());
  return Polytope::from_inequalities(n, sys);
}

CayleySpec cayley_from_json(const Json& j) {
  expect_format(j, "cayley.v1");
  CayleySpec spec;
  const Json& s = field(j, "s");
  if (!s.is_number_integer()) fail("s must be an integer");
  spec.s = s.get<long>();
  spec.factors = array_of<Polytope>(field(j, "factors"), "factors", polytope_from_json);
  validate(spec);
  return spec;
}

Fan fan_from_json(const Json& j) {
  expect_format(j, "fan.v1");
  Fan fan;
  fan.rays = array_of<IntVector>(field(j, "rays"), "rays", int_vector);
  if (fan.rays.empty()) fail("a fan needs rays");
  for (const auto& r : fan.rays) {
    if (r.size() != fan.rays.front().size()) throw Error(ErrorKind::DimensionMismatch, "rays have different lengths");
    if (content(r) == 0) throw Error(ErrorKind::ZeroVector, "zero ray");
  }
  fan.maximal_cones = array_of<std::vector<std::size_t>>(field(j, "maximal_cones"), "maximal_cones", [&](const Json& c) {
    auto cone = array_of<std::size_t>(c, "cone", [](const Json& e) { return size_from_json(e, "ray index"); });
    for (std::size_t r : cone)
      if (r >= fan.rays.size()) fail("ray index out of range");
    return cone;
  });
  return fan;
}

FanDivisor divisor_from_json(const Json& j) {
  FanDivisor d{fan_from_json(j), rat_vector(field(j, "coefficients"))};
  if (d.coefficients.size() != d.fan.rays.size()) fail("need one coefficient per ray");
  return d;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace polyadj::io
