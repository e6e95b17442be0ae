#include "sandwich/bundle.hpp"

namespace sandwich {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw BundleParseError(what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object()) bad(std::string("expected an object holding \"") + name + "\"");
  auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing field \"") + name + "\"");
  return *it;
}

json vecs_to_json(const std::vector<RatVec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vec_to_json(v));
  return out;
}

std::vector<RatVec> vecs_from_json(const json& j) {
  if (!j.is_array()) bad("expected a list of vectors");
  std::vector<RatVec> out;
  for (const auto& x : j) out.push_back(vec_from_json(x));
  return out;
}

RootType type_from_string(const std::string& s) {
  for (auto t : {RootType::A, RootType::B, RootType::C, RootType::D, RootType::E6, RootType::E7, RootType::E8,
                 RootType::F4, RootType::G2})
    if (to_string(t) == s) return t;
  bad("unknown root type \"" + s + "\"");
}

std::int64_t int_from_json(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace

json rat_to_json(const Rat& r) { return json::array({r.num(), r.den()}); }

Rat rat_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    bad("rational must be [num, den], got " + j.dump());
  auto n = j[0].get<std::int64_t>();
  auto d = j[1].get<std::int64_t>();
  if (d <= 0) bad("rational with non-positive denominator: " + j.dump());
  Rat r(n, d);
  if (r.num() != n || r.den() != d) bad("rational not in lowest terms: " + j.dump());
  return r;
}

json vec_to_json(const RatVec& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rat_to_json(v[i]));
  return out;
}

RatVec vec_from_json(const json& j) {
  if (!j.is_array()) bad("vector must be a list of rationals, got " + j.dump());
  std::vector<Rat> c;
  for (const auto& x : j) c.push_back(rat_from_json(x));
  return RatVec(std::move(c));
}

json mat_to_json(const RatMat& m) {
  json e = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) e.push_back(rat_to_json(m(i, k)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

RatMat mat_from_json(const json& j) {
  auto r = int_from_json(field(j, "rows"), "rows");
  auto c = int_from_json(field(j, "cols"), "cols");
  const json& e = field(j, "entries");
  if (r < 0 || c < 0 || !e.is_array() || e.size() != static_cast<std::size_t>(r * c))
    bad("matrix entries do not match its dimensions");
  RatMat m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = rat_from_json(e[i * m.cols() + k]);
  return m;
}

json center_to_json(const CenterReport& c) {
  return {{"center_roots", vecs_to_json(c.center_roots)}, {"dimension", c.dimension}, {"is_class_c", c.is_class_c}};
}

json to_json(const Bundle& b) {
  json fibers = json::array();
  for (const auto& [v, reps] : b.hat.fibers) fibers.push_back({{"restricted", vec_to_json(v)}, {"roots", vecs_to_json(reps)}});
  const Alignment& a = b.alignment;
  return {
      {"format", kBundleFormat},
      {"ambient",
       {{"type", std::string(to_string(b.ambient.type))},
        {"rank", b.ambient.rank},
        {"roots", vecs_to_json(b.ambient.roots.items())},
        {"simple_roots", vecs_to_json(b.ambient.simple_roots)}}},
      {"alignment",
       {{"h_star", vec_to_json(a.h_star)},
        {"r_zero", vecs_to_json(a.r_zero.items())},
        {"r_minus", vecs_to_json(a.r_minus.items())},
        {"restriction", mat_to_json(a.restriction)},
        {"r_zero_simple", vecs_to_json(a.r_zero_simple)}}},
      {"center", center_to_json(b.center)},
      {"hat",
       {{"M", b.hat.M},
        {"zeta", vec_to_json(b.hat.zeta)},
        {"phi", vecs_to_json(b.hat.phi.items())},
        {"pi_hat", vecs_to_json(b.hat.pi_hat)},
        {"basis", vecs_to_json(b.hat.basis)},
        {"fibers", fibers}}},
  };
}

Bundle bundle_from_json(const json& j) {
  try {
    const json& fmt = field(j, "format");
    if (!fmt.is_string() || fmt.get<std::string>() != kBundleFormat) bad("unsupported bundle format " + fmt.dump());

    Bundle b;
    const json& amb = field(j, "ambient");
    const json& type = field(amb, "type");
    if (!type.is_string()) bad("ambient type must be a string");
    b.ambient.type = type_from_string(type.get<std::string>());
    b.ambient.rank = static_cast<int>(int_from_json(field(amb, "rank"), "rank"));
    b.ambient.roots = RootSet(vecs_from_json(field(amb, "roots")));
    b.ambient.simple_roots = vecs_from_json(field(amb, "simple_roots"));

    const json& al = field(j, "alignment");
    b.alignment.ambient = b.ambient;
    b.alignment.h_star = vec_from_json(field(al, "h_star"));
    b.alignment.r_zero = RootSet(vecs_from_json(field(al, "r_zero")));
    b.alignment.r_minus = RootSet(vecs_from_json(field(al, "r_minus")));
    b.alignment.restriction = mat_from_json(field(al, "restriction"));
    b.alignment.r_zero_simple = vecs_from_json(field(al, "r_zero_simple"));

    const json& c = field(j, "center");
    b.center.center_roots = vecs_from_json(field(c, "center_roots"));
    b.center.dimension = static_cast<std::size_t>(int_from_json(field(c, "dimension"), "dimension"));
    const json& cc = field(c, "is_class_c");
    if (!cc.is_boolean()) bad("is_class_c must be a boolean");
    b.center.is_class_c = cc.get<bool>();

    const json& h = field(j, "hat");
    b.hat.M = static_cast<int>(int_from_json(field(h, "M"), "M"));
    b.hat.zeta = vec_from_json(field(h, "zeta"));
    b.hat.phi = RootSet(vecs_from_json(field(h, "phi")));
    b.hat.pi_hat = vecs_from_json(field(h, "pi_hat"));
    b.hat.basis = vecs_from_json(field(h, "basis"));
    const json& fibers = field(h, "fibers");
    if (!fibers.is_array()) bad("fibers must be a list");
    for (const auto& f : fibers) {
      auto key = vec_from_json(field(f, "restricted"));
      auto reps = vecs_from_json(field(f, "roots"));
      if (reps.empty()) bad("empty fiber over " + key.str());
      if (!b.hat.fibers.emplace(std::move(key), std::move(reps)).second) bad("duplicate fiber");
    }
    return b;
  } catch (const json::exception& e) {
    bad(std::string("malformed bundle: ") + e.what());
  } catch (const std::invalid_argument& e) {
    bad(std::string("malformed bundle: ") + e.what());
  }
}

}  // namespace sandwich
