#include "sandwich/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

namespace sandwich {

using nlohmann::json;

const std::vector<std::string>& check_registry() {
  static const std::vector<std::string> names = {
      "axioms",  "sum_collapse", "reflections", "relations", "mu",        "stability",          "induced_action",
      "tau",     "conjugation",  "phi",         "semidirect", "matrix_realization", "exact_sequence", "splitting"};
  return names;
}

std::vector<std::string> resolve_checks(const std::vector<std::string>& requested) {
  const auto& all = check_registry();
  if (requested.empty()) return all;
  for (const auto& r : requested)
    if (std::find(all.begin(), all.end(), r) == all.end()) throw UsageError("unknown check \"" + r + "\"");
  std::vector<std::string> out;
  for (const auto& n : all)
    if (std::find(requested.begin(), requested.end(), n) != requested.end()) out.push_back(n);
  return out;
}

namespace {

RootSystem config_root_system(const PipelineConfig& cfg) {
  try {
    return build_root_system(cfg.ambient_type, cfg.rank);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

RatVec to_ratvec(const std::vector<std::int64_t>& v) {
  std::vector<Rat> c(v.begin(), v.end());
  return RatVec(std::move(c));
}

}  // namespace

void validate_config(const PipelineConfig& cfg) {
  RootSystem rs = config_root_system(cfg);
  if (cfg.h_star.size() != rs.dim())
    throw UsageError("h_star for " + rs.label() + " needs " + std::to_string(rs.dim()) + " coordinates, got " +
                     std::to_string(cfg.h_star.size()));
  if (std::all_of(cfg.h_star.begin(), cfg.h_star.end(), [](std::int64_t x) { return x == 0; }))
    throw UsageError("h_star must be nonzero");
  if (cfg.output_format != "json" && cfg.output_format != "text")
    throw UsageError("unknown output format \"" + cfg.output_format + "\"");
  resolve_checks(cfg.checks);
}

Bundle build_bundle(const PipelineConfig& cfg) {
  validate_config(cfg);
  Bundle b;
  b.ambient = config_root_system(cfg);
  b.alignment = align(b.ambient, to_ratvec(cfg.h_star));
  b.center = nilradical_center(b.alignment);
  if (!b.center.is_class_c) throw ClassCError(b.center);
  b.hat = restrict_hat(b.alignment);
  return b;
}

// ---------------------------------------------------------------------------

namespace {

// Structures shared between checks, built on first use.
class Context {
 public:
  Context(const Bundle& b, const PipelineConfig& cfg) : b_(b), cfg_(cfg) {}

  const Bundle& bundle() const { return b_; }
  const VerifyLimits& limits() const { return cfg_.limits; }

  const FiniteGroup& w_hat() {
    if (!w_hat_) w_hat_.emplace(hat_weyl(b_.hat, cfg_.seed_cap));
    return *w_hat_;
  }
  const PhaseSpace& phase_space() {
    if (!ps_) ps_.emplace(build_phase_space(b_.hat));
    return *ps_;
  }
  const FiniteGroup& w_script() {
    if (!w_script_) w_script_.emplace(script_w(phase_space(), cfg_.seed_cap));
    return *w_script_;
  }
  const FiniteGroup& w_base() {
    if (!w_base_) w_base_.emplace(base_weyl(b_.alignment, cfg_.seed_cap));
    return *w_base_;
  }
  const std::vector<InducedMap>& induced() {
    if (!induced_) induced_.emplace(induced_actions(b_.alignment, b_.hat, w_base()));
    return *induced_;
  }
  const PhiTable& phi() {
    if (!phi_) phi_.emplace(build_phi_table(phase_space(), w_script(), induced()));
    return *phi_;
  }
  const SemidirectGroup& sdp() {
    if (!sdp_) sdp_.emplace(w_script(), w_base(), phi(), cfg_.seed_cap, cfg_.limits);
    return *sdp_;
  }
  const ExactSeqReport& exact() {
    if (!exact_) exact_.emplace(exact_sequence_check(sdp()));
    return *exact_;
  }

  json group_orders() const {
    auto order = [](const auto& g) { return g ? json(g->order()) : json(nullptr); };
    return {{"W_R", order(w_base_)},
            {"W_R_hat", order(w_hat_)},
            {"W_script", order(w_script_)},
            {"W_R_tilde", order(sdp_)},
            {"W_R_tilde_expected", sdp_ ? json(sdp_->expected_order()) : json(nullptr)}};
  }

 private:
  const Bundle& b_;
  const PipelineConfig& cfg_;
  std::optional<FiniteGroup> w_hat_, w_script_, w_base_;
  std::optional<PhaseSpace> ps_;
  std::optional<std::vector<InducedMap>> induced_;
  std::optional<PhiTable> phi_;
  std::optional<SemidirectGroup> sdp_;
  std::optional<ExactSeqReport> exact_;
};

void append(Report& into, const Report& from, const std::string& prefix) {
  for (const auto& c : from.checks) into.add({prefix + c.name, c.status, c.witness});
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : "; ") + p;
  return s;
}

Report run_check(const std::string& name, Context& cx) {
  const Bundle& b = cx.bundle();
  Report r;
  if (name == "axioms") {
    append(r, verify_axioms(b.hat), "hat.");
    append(r, verify_axioms(b.alignment.r_zero, b.alignment.r_zero_simple), "r_zero.");
  } else if (name == "sum_collapse") {
    r.add(check_sum_collapse(b.hat));
  } else if (name == "reflections") {
    append(r, verify_reflection_laws(b.hat.domain()), "hat.");
    append(r, verify_reflection_laws(b.alignment.r_zero_domain()), "r_zero.");
  } else if (name == "relations") {
    const FiniteGroup& w = cx.w_hat();
    const std::size_t want = std::size_t{1} << b.hat.M;
    r.add(CheckResult::from("order", w.order() == want,
                            "order " + std::to_string(w.order()) + ", expected " + std::to_string(want)));
    append(r, verify_group_axioms(w), "group.");
    append(r, verify_relations(b.hat, w), "");
  } else if (name == "mu") {
    const PhaseSpace& ps = cx.phase_space();
    std::string wit;
    for (int i = 1; i <= ps.M && wit.empty(); ++i)
      if (!is_symplectic(ps, s_generator(ps, i).matrix)) wit = "S_" + std::to_string(i) + " does not preserve omega";
    r.add(CheckResult::from("symplectic_generators", wit.empty(), wit));
    append(r, mu_isomorphism(cx.w_hat(), cx.w_script()), "");
  } else if (name == "stability") {
    r.add(check_rminus_stability(b.alignment, cx.w_base()));
  } else if (name == "induced_action") {
    r.add(CheckResult::from("well_defined", cx.induced().size() == cx.w_base().order(), "induced maps missing"));
  } else if (name == "tau") {
    append(r, tau_homomorphism_check(b.alignment, b.hat, cx.w_base(), cx.limits()), "");
  } else if (name == "conjugation") {
    const PhaseSpace& ps = cx.phase_space();
    std::string wit;
    for (const auto& im : cx.induced())
      if (wit.empty() && !is_symplectic(ps, lift_permutation(ps, im.tau).matrix))
        wit = "T" + im.tau.str() + " does not preserve omega";
    r.add(CheckResult::from("lifts_symplectic", wit.empty(), wit));
    r.add(check_lift_conjugation(ps, cx.induced()));
  } else if (name == "phi") {
    append(r, phi_homomorphism_check(cx.w_script(), cx.w_base(), cx.phi(), cx.limits()), "");
  } else if (name == "semidirect") {
    append(r, verify_semidirect_axioms(cx.sdp(), cx.limits()), "");
  } else if (name == "matrix_realization") {
    const auto& g = cx.sdp();
    if (g.expected_order() > cx.limits().matrix_realization)
      r.add(CheckResult::skip("matrix_realization", "order " + std::to_string(g.expected_order()) + " above the model limit"));
    else
      r.add(check_matrix_realization(g));
  } else if (name == "exact_sequence") {
    const ExactSeqReport& e = cx.exact();
    r.add(CheckResult::from("image_equals_kernel", e.image_equals_kernel, join(e.witnesses)));
    r.add(CheckResult::from("image_normal", e.image_normal, join(e.witnesses)));
    r.add(CheckResult::from("order_product", e.order_product_ok, join(e.witnesses)));
  } else if (name == "splitting") {
    const ExactSeqReport& e = cx.exact();
    r.add(CheckResult::from("section", e.splitting_ok, join(e.witnesses)));
  }
  return r;
}

json check_to_json(const CheckResult& c) {
  json j = {{"name", c.name}, {"status", std::string(to_string(c.status))}};
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

Status overall(const Report& r) {
  if (!r.ok()) return Status::fail;
  for (const auto& c : r.checks)
    if (c.passed()) return Status::pass;
  return Status::skipped;
}

}  // namespace

json run_verify(const Bundle& b, const PipelineConfig& cfg) {
  using clock = std::chrono::steady_clock;
  const auto selected = resolve_checks(cfg.checks);
  const auto t0 = clock::now();

  Context cx(b, cfg);
  json checks = json::array();
  json timing_checks = json::object();
  bool passed = true;
  for (const auto& name : check_registry()) {
    json entry = {{"name", name}};
    if (std::find(selected.begin(), selected.end(), name) == selected.end()) {
      entry["status"] = "skipped";
      entry["checks"] = json::array();
      checks.push_back(entry);
      continue;
    }
    const auto t = clock::now();
    Report r;
    try {
      r = run_check(name, cx);
    } catch (const std::exception& e) {
      r.add(CheckResult::fail("error", e.what()));
    }
    timing_checks[name] = std::chrono::duration<double, std::milli>(clock::now() - t).count();
    Status s = overall(r);
    passed = passed && s != Status::fail;
    entry["status"] = std::string(to_string(s));
    json sub = json::array();
    for (const auto& c : r.checks) sub.push_back(check_to_json(c));
    entry["checks"] = sub;
    checks.push_back(entry);
  }

  json phi = json::array();
  for (const auto& v : b.hat.phi) phi.push_back(vec_to_json(v));
  json pi_hat = json::array();
  for (const auto& v : b.hat.pi_hat) pi_hat.push_back(vec_to_json(v));

  return {
      {"config",
       {{"ambient_type", std::string(to_string(b.ambient.type))},
        {"rank", b.ambient.rank},
        {"h_star", vec_to_json(b.alignment.h_star)},
        {"checks", selected},
        {"cap", cfg.seed_cap}}},
      {"alignment", {{"r_zero", b.alignment.r_zero.size()}, {"r_minus", b.alignment.r_minus.size()}}},
      {"center", center_to_json(b.center)},
      {"hat", {{"M", b.hat.M}, {"phi", phi}, {"pi_hat", pi_hat}}},
      {"groups", cx.group_orders()},
      {"checks", checks},
      {"passed", passed},
      {"timing",
       {{"threads", thread_count()},
        {"total_ms", std::chrono::duration<double, std::milli>(clock::now() - t0).count()},
        {"checks_ms", timing_checks}}},
  };
}

bool report_passed(const json& report) {
  for (const auto& c : report.at("checks"))
    if (c.at("status") == "fail") return false;
  return true;
}

std::string canonical_dump(const json& report) {
  json copy = report;
  copy.erase("timing");
  return copy.dump(2) + "\n";
}

std::string format_text(const json& r) {
  std::ostringstream os;
  const json& cfg = r.at("config");
  auto vec_str = [](const json& v) { return vec_from_json(v).str(); };
  os << cfg.at("ambient_type").get<std::string>() << cfg.at("rank").get<int>() << "  h* = " << vec_str(cfg.at("h_star"))
     << "\n";
  os << "  |R0| = " << r.at("alignment").at("r_zero") << "  |R-| = " << r.at("alignment").at("r_minus")
     << "  center dimension = " << r.at("center").at("dimension") << "  M = " << r.at("hat").at("M") << "\n";
  os << "  pi_hat:";
  for (const auto& v : r.at("hat").at("pi_hat")) os << " " << vec_str(v);
  os << "\n  orders:";
  for (const auto& [k, v] : r.at("groups").items())
    if (!v.is_null()) os << " |" << k << "| = " << v;
  os << "\n";
  for (const auto& c : r.at("checks")) {
    const std::string st = c.at("status").get<std::string>();
    os << "  " << (st == "pass" ? "ok  " : st == "fail" ? "FAIL" : "skip") << "  " << c.at("name").get<std::string>() << "\n";
    for (const auto& s : c.at("checks"))
      if (s.at("status") != "pass") {
        os << "          " << s.at("name").get<std::string>() << " (" << s.at("status").get<std::string>() << ")";
        if (s.contains("witness")) os << ": " << s.at("witness").get<std::string>();
        os << "\n";
      }
  }
  os << (r.at("passed").get<bool>() ? "verified\n" : "verification failed\n");
  return os.str();
}

json rejection_json(const CenterReport& c) {
  return {{"error", "not_class_c"}, {"center", center_to_json(c)}};
}

// ---------------------------------------------------------------------------

std::vector<ScanHit> scan(const std::string& ambient_type, int rank, int bound) {
  if (bound < 1) throw UsageError("scan bound must be at least 1");
  PipelineConfig cfg;
  cfg.ambient_type = ambient_type;
  cfg.rank = rank;
  RootSystem rs = config_root_system(cfg);
  const std::size_t n = rs.dim();

  std::vector<ScanHit> hits;
  std::vector<std::int64_t> v(n, -bound);
  AlignOptions opts;
  opts.verify_r_zero = false;
  for (;;) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    if (g == 1) {
      try {
        Alignment a = align(rs, to_ratvec(v), opts);
        if (nilradical_center(a).is_class_c) hits.push_back({v, restrict_hat(a).M});
      } catch (const AlignmentError&) {
      } catch (const ClassCError&) {
      }
    }
    std::size_t k = n;
    while (k > 0 && v[k - 1] == bound) v[--k] = -bound;
    if (k == 0) break;
    ++v[k - 1];
  }
  return hits;
}

json scan_to_json(const std::string& ambient_type, int rank, int bound, const std::vector<ScanHit>& hits) {
  json c = json::array();
  for (const auto& h : hits) c.push_back({{"h_star", h.h_star}, {"M", h.M}});
  return {{"ambient_type", ambient_type}, {"rank", rank}, {"bound", bound}, {"candidates", c}};
}

}  // namespace sandwich
