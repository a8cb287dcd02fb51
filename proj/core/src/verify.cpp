#include "qhom/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qhom {

namespace {

using json = nlohmann::ordered_json;

json dim_json(const Dimension& d) {
  if (d.finite()) return *d.value;
  return d.str();
}

bool is(const Dimension& d, std::size_t v) { return d.finite() && *d.value == v; }
bool at_most(const Dimension& d, std::size_t v) { return d.finite() && *d.value <= v; }

std::string side_name(Side s) { return s == Side::left ? "left" : "right"; }

json witness_json(const OrthogonalityWitness& w) {
  json j;
  j["module"] = w.module;
  j["direction"] = side_name(w.direction);
  if (w.degree) j["degree"] = *w.degree;
  if (w.partner) j["partner"] = *w.partner;
  j["text"] = w.describe();
  return j;
}

// Everything the checks share, computed once per run.
class Context {
 public:
  Context(AlgebraPtr a, std::size_t cap, std::uint64_t seed) : a_(std::move(a)), cap_(cap), seed_(seed) {
    const std::size_t n = a_->vertex_count();
    universe_ = enumerate_indecomposables(a_);
    gl_dim_ = global_dimension(a_, cap_);

    for (std::size_t v = 0; v < n; ++v) {
      proj_.push_back(standard_module(a_, StandardKind::projective, v));
      inj_.push_back(standard_module(a_, StandardKind::injective, v));
      simple_.push_back(standard_module(a_, StandardKind::simple, v));
    }
    for (std::size_t v = 0; v < n; ++v) {
      regular_inj_res_.push_back(minimal_resolution(proj_[v], ResolutionKind::injective, cap_));
      proj_id_.push_back(injective_dimension(proj_[v], cap_));
      inj_pd_.push_back(projective_dimension(inj_[v], cap_));
      simple_pd_.push_back(projective_dimension(simple_[v], cap_));
      simple_id_.push_back(injective_dimension(simple_[v], cap_));
    }
    const auto op = a_->opposite();
    id_regular_ = Dimension::exact(0);
    id_regular_op_ = Dimension::exact(0);
    for (std::size_t v = 0; v < n; ++v) {
      id_regular_ = max(id_regular_, proj_id_[v]);
      id_regular_op_ = max(id_regular_op_, injective_dimension(standard_module(op, StandardKind::projective, v), cap_));
    }

    if (universe_.complete) {
      rows_ = describe_universe(universe_, cap_);
      candidate_ = with_universe_names(trivial_candidate(a_, seed_), universe_, seed_);
      maximal1_ = is_maximal_orthogonal(candidate_, 1, universe_.objects, true, cap_, seed_);
    } else {
      candidate_ = trivial_candidate(a_, seed_);
    }
  }

  [[nodiscard]] const AlgebraPtr& algebra() const { return a_; }
  [[nodiscard]] std::size_t cap() const { return cap_; }
  [[nodiscard]] std::uint64_t seed() const { return seed_; }
  [[nodiscard]] const Universe& universe() const { return universe_; }
  [[nodiscard]] const std::vector<UniverseRow>& rows() const { return rows_; }
  [[nodiscard]] const SubcategorySet& candidate() const { return candidate_; }
  [[nodiscard]] const Dimension& gl_dim() const { return gl_dim_; }
  [[nodiscard]] const std::optional<MaximalityResult>& maximal1() const { return maximal1_; }

  [[nodiscard]] std::size_t vertex_count() const { return a_->vertex_count(); }
  [[nodiscard]] const Representation& projective(std::size_t v) const { return proj_[v]; }
  [[nodiscard]] const Representation& injective(std::size_t v) const { return inj_[v]; }
  [[nodiscard]] const Representation& simple(std::size_t v) const { return simple_[v]; }
  [[nodiscard]] const Dimension& projective_id(std::size_t v) const { return proj_id_[v]; }
  [[nodiscard]] const Dimension& injective_pd(std::size_t v) const { return inj_pd_[v]; }
  [[nodiscard]] const Dimension& simple_pd(std::size_t v) const { return simple_pd_[v]; }
  [[nodiscard]] const Dimension& simple_id(std::size_t v) const { return simple_id_[v]; }
  [[nodiscard]] const Dimension& id_regular() const { return id_regular_; }
  [[nodiscard]] const Dimension& id_regular_op() const { return id_regular_op_; }

  /// Vertices w of the summands I(w) of I^k(A), or nullopt past the end of
  /// a truncated resolution.
  [[nodiscard]] std::optional<std::vector<std::size_t>> regular_injective_term(std::size_t k) const {
    std::vector<std::size_t> out;
    for (const auto& r : regular_inj_res_) {
      if (k < r.terms.size()) {
        out.insert(out.end(), r.term_vertices[k].begin(), r.term_vertices[k].end());
      } else if (r.truncated) {
        return std::nullopt;
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  [[nodiscard]] bool gorenstein_1() const {
    const auto t = regular_injective_term(0);
    return std::all_of(t->begin(), t->end(), [&](std::size_t w) { return is(inj_pd_[w], 0); });
  }

  [[nodiscard]] const std::vector<std::vector<std::size_t>>& homs() const {
    if (homs_.empty() && universe_.complete) homs_ = hom_table(universe_);
    return homs_;
  }

  [[nodiscard]] std::string name(const Representation& m) const {
    if (universe_.complete) {
      if (auto k = universe_.find(m, seed_)) return universe_.objects[*k].name;
    }
    const auto& labels = a_->quiver().vertices();
    for (std::size_t v = 0; v < vertex_count(); ++v) {
      if (is_isomorphic(m, proj_[v], seed_)) return "P" + labels[v];
      if (is_isomorphic(m, inj_[v], seed_)) return "I" + labels[v];
      if (is_isomorphic(m, simple_[v], seed_)) return "S" + labels[v];
    }
    std::string out = "[";
    for (std::size_t v = 0; v < m.dims().size(); ++v) out += (v ? "," : "") + std::to_string(m.dim(v));
    return out + "]";
  }

  [[nodiscard]] std::string simple_name(std::size_t v) const { return "S" + a_->quiver().label(v); }
  [[nodiscard]] std::string projective_name(std::size_t v) const { return "P" + a_->quiver().label(v); }
  [[nodiscard]] std::string injective_name(std::size_t v) const { return "I" + a_->quiver().label(v); }

  /// Standing hypotheses for global dimension two: empty if they hold.
  [[nodiscard]] std::vector<std::string> standing_failures() const {
    std::vector<std::string> out;
    if (!is(gl_dim_, 2)) out.push_back("gl.dim = 2 (found " + gl_dim_.str() + ")");
    if (!universe_.complete) {
      out.push_back("complete universe of indecomposables");
      out.push_back("trivial candidate maximal 1-orthogonal");
    } else if (!maximal1_->maximal) {
      out.push_back("trivial candidate maximal 1-orthogonal");
    }
    return out;
  }

 private:
  AlgebraPtr a_;
  std::size_t cap_;
  std::uint64_t seed_;
  Universe universe_;
  std::vector<UniverseRow> rows_;
  SubcategorySet candidate_;
  Dimension gl_dim_;
  std::optional<MaximalityResult> maximal1_;
  std::vector<Representation> proj_, inj_, simple_;
  std::vector<Resolution> regular_inj_res_;
  std::vector<Dimension> proj_id_, inj_pd_, simple_pd_, simple_id_;
  Dimension id_regular_, id_regular_op_;
  mutable std::vector<std::vector<std::size_t>> homs_;
};

CheckResult skipped(const std::string& id, const std::vector<std::string>& failures) {
  json d;
  std::string reason = "hypotheses not satisfied: ";
  for (std::size_t k = 0; k < failures.size(); ++k) reason += (k ? "; " : "") + failures[k];
  d["reason"] = reason;
  d["failed_hypotheses"] = failures;
  return CheckResult{id, CheckStatus::skipped, std::move(d)};
}

CheckStatus verdict(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

// ---------------------------------------------------------------------------

CheckResult check_top_injective_term(const Context& ctx) {
  const std::string id = "L2.1";
  const auto& ia = ctx.id_regular();
  const auto& ib = ctx.id_regular_op();
  if (!ia.finite() || !ib.finite() || *ia.value != *ib.value) {
    return skipped(id, {"id A = id A^op finite (found " + ia.str() + " and " + ib.str() + ")"});
  }
  const std::size_t n = *ia.value;
  const auto term = *ctx.regular_injective_term(n);
  json d;
  d["n"] = n;
  json summands = json::array();
  bool ok = true;
  std::vector<std::size_t> seen;
  for (auto w : term) {
    if (std::find(seen.begin(), seen.end(), w) != seen.end()) continue;
    seen.push_back(w);
    const auto& pd = ctx.injective_pd(w);
    ok = ok && is(pd, n);
    summands.push_back({{"module", ctx.name(ctx.injective(w))}, {"pd", dim_json(pd)}});
  }
  d["summands"] = summands;
  if (term.empty()) return CheckResult{id, CheckStatus::vacuous, std::move(d)};
  return CheckResult{id, verdict(ok), std::move(d)};
}

CheckResult check_injectives_projective_or_top_pd(const Context& ctx) {
  const std::string id = "L2.10";
  const auto& gl = ctx.gl_dim();
  if (!gl.finite() || *gl.value < 2) return skipped(id, {"gl.dim = n >= 2 (found " + gl.str() + ")"});
  const std::size_t n = *gl.value;
  if (!ctx.universe().complete) {
    return skipped(id, {"complete universe of indecomposables",
                        "trivial candidate maximal " + std::to_string(n - 1) + "-orthogonal"});
  }
  const auto m =
      n == 2 ? *ctx.maximal1()
             : is_maximal_orthogonal(ctx.candidate(), n - 1, ctx.universe().objects, true, ctx.cap(), ctx.seed());
  if (!m.maximal) return skipped(id, {"trivial candidate maximal " + std::to_string(n - 1) + "-orthogonal"});

  json d;
  d["n"] = n;
  json bad = json::array();
  for (std::size_t v = 0; v < ctx.vertex_count(); ++v) {
    const auto& pd = ctx.injective_pd(v);
    if (!is(pd, 0) && !is(pd, n)) bad.push_back({{"module", ctx.injective_name(v)}, {"pd", dim_json(pd)}});
    const auto& idv = ctx.projective_id(v);
    if (!is(idv, 0) && !is(idv, n)) bad.push_back({{"module", ctx.projective_name(v)}, {"id", dim_json(idv)}});
  }
  const bool ok = bad.empty();
  d["violations"] = bad;
  return CheckResult{id, verdict(ok), std::move(d)};
}

CheckResult check_ext2_bijection(const Context& ctx) {
  const std::string id = "L2.11";
  if (auto f = ctx.standing_failures(); !f.empty()) return skipped(id, f);
  const auto& objs = ctx.candidate().objects;
  std::vector<std::size_t> non_proj;
  std::vector<std::size_t> non_inj;
  for (std::size_t k = 0; k < objs.size(); ++k) {
    if (!is(projective_dimension(objs[k].module, ctx.cap()), 0)) non_proj.push_back(k);
    if (!is(injective_dimension(objs[k].module, ctx.cap()), 0)) non_inj.push_back(k);
  }
  json d;
  d["non_projective"] = non_proj.size();
  d["non_injective"] = non_inj.size();
  json pairs = json::array();
  bool ok = non_proj.size() == non_inj.size();
  std::vector<std::size_t> hit;
  for (auto k : non_proj) {
    const auto image = duality(ext_module(objs[k].module, 2, ctx.cap()));
    const auto where = ctx.candidate().find(image, ctx.seed());
    const bool lands = where && std::find(non_inj.begin(), non_inj.end(), *where) != non_inj.end();
    bool inverse_ok = false;
    if (lands) {
      hit.push_back(*where);
      const auto back = ext_module(duality(objs[*where].module), 2, ctx.cap());
      inverse_ok = is_isomorphic(back, objs[k].module, ctx.seed());
    }
    ok = ok && lands && inverse_ok;
    pairs.push_back(
        {{"from", objs[k].name}, {"to", where ? objs[*where].name : ctx.name(image)}, {"inverse_matches", inverse_ok}});
  }
  std::sort(hit.begin(), hit.end());
  ok = ok && std::adjacent_find(hit.begin(), hit.end()) == hit.end() && hit.size() == non_inj.size();
  d["pairs"] = pairs;
  if (non_proj.empty() && non_inj.empty()) return CheckResult{id, CheckStatus::vacuous, std::move(d)};
  return CheckResult{id, verdict(ok), std::move(d)};
}

CheckResult check_tilting_hypotheses(const Context& ctx) {
  const std::string id = "L2.13H";
  std::vector<std::string> failures;
  if (!ctx.gorenstein_1()) failures.push_back("1-Gorenstein");
  if (!ctx.universe().complete) {
    failures.push_back("complete universe of indecomposables");
  } else {
    const auto& rows = ctx.rows();
    const bool ah = at_most(ctx.gl_dim(), 2) && std::all_of(rows.begin(), rows.end(), [](const UniverseRow& r) {
                      return at_most(r.pd, 1) || at_most(r.id, 1);
                    });
    if (!ah) failures.push_back("almost hereditary");
  }
  if (!failures.empty()) return skipped(id, failures);

  const auto& u = ctx.universe();
  const auto& rows = ctx.rows();
  const auto r = reaches(u);
  std::vector<bool> in_r(u.size(), true);
  for (std::size_t x = 0; x < u.size(); ++x)
    for (std::size_t y = 0; y < u.size(); ++y)
      if (r[x][y] && !at_most(rows[y].id, 1)) in_r[x] = false;

  json d;
  json outside = json::array();
  json members = json::array();
  for (std::size_t x = 0; x < u.size(); ++x)
    if (in_r[x]) members.push_back(rows[x].name);
  for (std::size_t v = 0; v < ctx.vertex_count(); ++v) {
    const auto k = u.find(ctx.injective(v), ctx.seed());
    if (!k || !in_r[*k]) outside.push_back(ctx.injective_name(v));
  }
  json proj_inj = json::array();
  for (const auto& row : rows)
    if (row.projective && row.injective) proj_inj.push_back(row.name);
  d["r_lambda"] = members;
  d["injectives_outside"] = outside;
  d["projective_injective"] = proj_inj;
  return CheckResult{id, verdict(outside.empty() && !proj_inj.empty()), std::move(d)};
}

CheckResult check_approximation_of_simples(const Context& ctx) {
  const std::string id = "L3.1";
  if (auto f = ctx.standing_failures(); !f.empty()) return skipped(id, f);
  json d;
  json cases = json::array();
  bool ok = true;
  for (std::size_t v = 0; v < ctx.vertex_count(); ++v) {
    if (!is(ctx.simple_pd(v), 2) || is(ctx.simple_id(v), 0)) continue;
    const auto f = minimal_approximation(ctx.candidate(), ctx.simple(v), Side::right, ctx.seed());
    const auto parts = morphism_parts(f);
    json c;
    c["simple"] = ctx.simple_name(v);
    bool case_ok = f.is_epi();
    json kernel = json::array();
    for (const auto& q : decompose(parts.kernel, ctx.seed())) {
      const auto pd = projective_dimension(q, ctx.cap());
      const auto idq = injective_dimension(q, ctx.cap());
      case_ok = case_ok && is(pd, 0) && is(idq, 2);
      kernel.push_back({{"module", ctx.name(q)}, {"pd", dim_json(pd)}, {"id", dim_json(idq)}});
    }
    json middle = json::array();
    for (const auto& e : decompose(f.source(), ctx.seed())) {
      const auto pd = projective_dimension(e, ctx.cap());
      const auto ide = injective_dimension(e, ctx.cap());
      const auto tops = top_multiplicities(e);
      const bool simple_top = std::accumulate(tops.begin(), tops.end(), std::size_t{0}) == 1;
      case_ok = case_ok && is(ide, 0) && is(pd, 2) && simple_top;
      middle.push_back(
          {{"module", ctx.name(e)}, {"pd", dim_json(pd)}, {"id", dim_json(ide)}, {"simple_top", simple_top}});
    }
    c["kernel"] = kernel;
    c["middle"] = middle;
    c["ok"] = case_ok;
    ok = ok && case_ok;
    cases.push_back(std::move(c));
  }
  d["cases"] = cases;
  if (cases.empty()) return CheckResult{id, CheckStatus::vacuous, std::move(d)};
  return CheckResult{id, verdict(ok), std::move(d)};
}

CheckResult check_simples_pd2_small_id(const Context& ctx) {
  const std::string id = "L3.2";
  if (auto f = ctx.standing_failures(); !f.empty()) return skipped(id, f);
  json d;
  json cases = json::array();
  bool ok = true;
  for (std::size_t v = 0; v < ctx.vertex_count(); ++v) {
    if (!is(ctx.simple_pd(v), 2)) continue;
    const bool good = at_most(ctx.simple_id(v), 1);
    ok = ok && good;
    cases.push_back({{"simple", ctx.simple_name(v)}, {"id", dim_json(ctx.simple_id(v))}});
  }
  d["cases"] = cases;
  if (cases.empty()) return CheckResult{id, CheckStatus::vacuous, std::move(d)};
  return CheckResult{id, verdict(ok), std::move(d)};
}

std::vector<std::size_t> simples_pd2_id1(const Context& ctx) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < ctx.vertex_count(); ++v)
    if (is(ctx.simple_pd(v), 2) && is(ctx.simple_id(v), 1)) out.push_back(v);
  return out;
}

CheckResult check_ext_modules_of_simples(const Context& ctx) {
  const std::string id = "L3.3";
  if (auto f = ctx.standing_failures(); !f.empty()) return skipped(id, f);
  json d;
  json cases = json::array();
  bool ok = true;
  for (auto v : simples_pd2_id1(ctx)) {
    const auto e1 = ext_module(ctx.simple(v), 1, ctx.cap());
    const auto e2 = ext_module(ctx.simple(v), 2, ctx.cap());
    const auto e1_pd = projective_dimension(e1, ctx.cap());
    const auto e2_id = injective_dimension(e2, ctx.cap());
    const auto e2_pd = projective_dimension(e2, ctx.cap());
    const bool good = !e1.is_zero() && is(e1_pd, 0) && !e2.is_zero() && is(e2_id, 0) && is(e2_pd, 2);
    ok = ok && good;
    cases.push_back({{"simple", ctx.simple_name(v)},
                     {"ext1_pd", dim_json(e1_pd)},
                     {"ext2_id", dim_json(e2_id)},
                     {"ext2_pd", dim_json(e2_pd)}});
  }
  d["cases"] = cases;
  if (cases.empty()) return CheckResult{id, CheckStatus::vacuous, std::move(d)};
  return CheckResult{id, verdict(ok), std::move(d)};
}

CheckResult check_dualized_injective_resolution(const Context& ctx) {
  const std::string id = "L3.4";
  if (auto f = ctx.standing_failures(); !f.empty()) return skipped(id, f);
  json d;
  json cases = json::array();
  bool ok = true;
  for (auto v : simples_pd2_id1(ctx)) {
    const auto& s = ctx.simple(v);
    const auto ins = minimal_resolution(s, ResolutionKind::injective, ctx.cap());
    const auto e1 = ext_module(s, 1, ctx.cap());
    const auto res = minimal_resolution(e1, ResolutionKind::injective, ctx.cap());
    // Expected terms: Ext^2(I^1 S, A), Ext^2(I^0 S, A), Ext^2(S, A).
    std::vector<Representation> expected;
    if (ins.terms.size() == 2) {
      expected.push_back(ext_module(ins.terms[1], 2, ctx.cap()));
      expected.push_back(ext_module(ins.terms[0], 2, ctx.cap()));
      expected.push_back(ext_module(s, 2, ctx.cap()));
    }
    bool good = !res.truncated && expected.size() == 3 && res.terms.size() == 3;
    for (std::size_t k = 0; good && k < 3; ++k) good = is_isomorphic(res.terms[k], expected[k], ctx.seed());
    ok = ok && good;
    cases.push_back({{"simple", ctx.simple_name(v)}, {"resolution_length", res.length()}, {"terms_match", good}});
  }
  d["cases"] = cases;
  d["scope"] = "object level: termwise isomorphism of the minimal injective resolution";
  if (cases.empty()) return CheckResult{id, CheckStatus::vacuous, std::move(d)};
  return CheckResult{id, verdict(ok), std::move(d)};
}

std::vector<std::string> gorenstein_failures(const Context& ctx) {
  auto f = ctx.standing_failures();
  if (!ctx.gorenstein_1()) f.push_back("1-Gorenstein");
  return f;
}

CheckResult check_simples_dichotomy(const Context& ctx) {
  const std::string id = "P3.5";
  if (auto f = gorenstein_failures(ctx); !f.empty()) return skipped(id, f);
  json d;
  json pd2 = json::array();
  json violations = json::array();
  for (std::size_t v = 0; v < ctx.vertex_count(); ++v) {
    const auto& pd = ctx.simple_pd(v);
    const auto& idv = ctx.simple_id(v);
    if (is(pd, 2)) {
      pd2.push_back(ctx.simple_name(v));
      if (!is(idv, 0)) violations.push_back({{"simple", ctx.simple_name(v)}, {"claim", "pd 2 implies injective"}});
    }
    if (is(pd, 1) != is(idv, 1)) {
      violations.push_back(
          {{"simple", ctx.simple_name(v)}, {"claim", "pd 1 iff id 1"}, {"pd", dim_json(pd)}, {"id", dim_json(idv)}});
    }
  }
  d["pd2_simples"] = pd2;
  d["violations"] = violations;
  return CheckResult{id, verdict(violations.empty()), std::move(d)};
}

CheckResult check_no_maps_into_deep_projectives(const Context& ctx) {
  const std::string id = "L3.6";
  if (auto f = gorenstein_failures(ctx); !f.empty()) return skipped(id, f);
  const auto& rows = ctx.rows();
  const auto& homs = ctx.homs();
  json d;
  json targets = json::array();
  json violations = json::array();
  std::size_t sources = 0;
  for (std::size_t p = 0; p < rows.size(); ++p) {
    if (!rows[p].projective || !is(rows[p].id, 2)) continue;
    targets.push_back(rows[p].name);
    for (std::size_t m = 0; m < rows.size(); ++m) {
      if (rows[m].projective) continue;
      if (homs[m][p] != 0) violations.push_back({{"from", rows[m].name}, {"to", rows[p].name}, {"dim", homs[m][p]}});
    }
  }
  for (const auto& r : rows) sources += r.projective ? 0 : 1;
  d["projectives_with_id_2"] = targets;
  d["non_projective_count"] = sources;
  d["violations"] = violations;
  if (targets.empty() || sources == 0) return CheckResult{id, CheckStatus::vacuous, std::move(d)};
  return CheckResult{id, verdict(violations.empty()), std::move(d)};
}

CheckResult check_indecomposables_dichotomy(const Context& ctx) {
  const std::string id = "T3.7";
  if (auto f = gorenstein_failures(ctx); !f.empty()) return skipped(id, f);
  const auto& rows = ctx.rows();
  json d;
  json pd1 = json::array();
  json id1 = json::array();
  json pd2 = json::array();
  json table = json::array();
  bool ok = true;
  for (const auto& r : rows) {
    if (is(r.pd, 1)) pd1.push_back(r.name);
    if (is(r.id, 1)) id1.push_back(r.name);
    if (is(r.pd, 2)) {
      pd2.push_back(r.name);
      ok = ok && r.injective;
    }
    ok = ok && is(r.pd, 1) == is(r.id, 1);
    table.push_back({{"module", r.name}, {"pd", dim_json(r.pd)}, {"id", dim_json(r.id)}});
  }
  d["pd1"] = pd1;
  d["id1"] = id1;
  d["pd2"] = pd2;
  d["table"] = table;
  return CheckResult{id, verdict(ok), std::move(d)};
}

using CheckFn = CheckResult (*)(const Context&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> r = {
      {"L2.1", check_top_injective_term},        {"L2.10", check_injectives_projective_or_top_pd},
      {"L2.11", check_ext2_bijection},           {"L2.13H", check_tilting_hypotheses},
      {"L3.1", check_approximation_of_simples},  {"L3.2", check_simples_pd2_small_id},
      {"L3.3", check_ext_modules_of_simples},    {"L3.4", check_dualized_injective_resolution},
      {"P3.5", check_simples_dichotomy},         {"L3.6", check_no_maps_into_deep_projectives},
      {"T3.7", check_indecomposables_dichotomy},
  };
  return r;
}

StructureFlags flags_from(const Context& ctx) {
  StructureFlags f;
  f.gl_dim = ctx.gl_dim();
  f.nakayama = is_nakayama(*ctx.algebra());
  f.gorenstein_1 = ctx.gorenstein_1();
  f.id_regular = ctx.id_regular();
  f.id_regular_op = ctx.id_regular_op();
  const auto i1 = ctx.regular_injective_term(1);
  if (i1 && !i1->empty()) {
    Dimension pd = Dimension::exact(0);
    for (auto w : *i1) pd = max(pd, ctx.injective_pd(w));
    f.pd_i1 = pd;
  }
  bool i1_projective =
      !i1 || std::all_of(i1->begin(), i1->end(), [&](std::size_t w) { return is(ctx.injective_pd(w), 0); });
  if (!i1) i1_projective = false;
  f.auslander_algebra = at_most(ctx.gl_dim(), 2) && f.gorenstein_1 && i1_projective;
  if (ctx.universe().complete) {
    const auto& rows = ctx.rows();
    f.almost_hereditary = at_most(ctx.gl_dim(), 2) && std::all_of(rows.begin(), rows.end(), [](const UniverseRow& r) {
                            return at_most(r.pd, 1) || at_most(r.id, 1);
                          });
    f.trivial_is_maximal_1_orthogonal = ctx.maximal1()->maximal;
    f.maximality_witness = ctx.maximal1()->witness;
  }
  return f;
}

json optional_bool(const std::optional<bool>& b) {
  if (!b) return "unknown";
  return *b;
}

json algebra_json(const Context& ctx, const StructureFlags& f) {
  const auto& a = *ctx.algebra();
  json j;
  j["field"] = a.field().modulus();
  j["vertices"] = a.quiver().vertices();
  json arrows = json::array();
  for (const auto& arr : a.quiver().arrows()) {
    arrows.push_back(
        {{"name", arr.name}, {"source", a.quiver().label(arr.source)}, {"target", a.quiver().label(arr.target)}});
  }
  j["arrows"] = arrows;
  json rels = json::array();
  for (const auto& r : a.relations()) rels.push_back(a.path_name(r));
  j["relations"] = rels;
  j["dimension"] = a.dimension();
  j["cartan"] = cartan_matrix(a);
  j["cap"] = ctx.cap();
  j["gl_dim"] = dim_json(f.gl_dim);
  json flags;
  flags["gorenstein_1"] = f.gorenstein_1;
  flags["auslander_algebra"] = f.auslander_algebra;
  flags["almost_hereditary"] = optional_bool(f.almost_hereditary);
  flags["gl_dim"] = dim_json(f.gl_dim);
  flags["nakayama"] = f.nakayama;
  flags["trivial_is_maximal_1_orthogonal"] = optional_bool(f.trivial_is_maximal_1_orthogonal);
  j["flags"] = flags;
  j["pd_I1"] = f.pd_i1 ? dim_json(*f.pd_i1) : json(nullptr);
  j["id_regular"] = dim_json(f.id_regular);
  j["id_regular_op"] = dim_json(f.id_regular_op);
  json universe;
  universe["complete"] = ctx.universe().complete;
  universe["size"] = ctx.universe().size();
  j["universe"] = universe;
  json cand = json::array();
  for (const auto& o : ctx.candidate().objects) cand.push_back(o.name);
  j["trivial_candidate"] = cand;
  if (f.maximality_witness) j["maximality_witness"] = witness_json(*f.maximality_witness);
  return j;
}

}  // namespace

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::vacuous:
      return "vacuous";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "?";
}

bool CheckReport::passed() const noexcept {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

const CheckResult* CheckReport::find(const std::string& id) const noexcept {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

StructureFlags structure_flags(const AlgebraPtr& a, std::size_t cap, std::uint64_t seed) {
  return flags_from(Context(a, cap, seed));
}

CheckResult run_check(const AlgebraPtr& a, const std::string& id, std::size_t cap, std::uint64_t seed) {
  for (const auto& [name, fn] : registry()) {
    if (name == id) return fn(Context(a, cap, seed));
  }
  throw std::invalid_argument("unknown check id '" + id + "'");
}

CheckReport verify_all(const AlgebraPtr& a, std::size_t cap, std::uint64_t seed) {
  const Context ctx(a, cap, seed);
  CheckReport report;
  report.algebra = algebra_json(ctx, flags_from(ctx));
  for (const auto& [name, fn] : registry()) report.checks.push_back(fn(ctx));
  return report;
}

nlohmann::ordered_json to_json(const CheckReport& report) {
  json j;
  j["algebra"] = report.algebra;
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"id", c.id}, {"status", to_string(c.status)}, {"details", c.details}});
  }
  j["checks"] = checks;
  j["overall"] = report.passed() ? "pass" : "fail";
  return j;
}

std::string to_text(const CheckReport& report) {
  std::ostringstream out;
  const auto& a = report.algebra;
  out << "algebra: " << a["vertices"].size() << " vertices, " << a["arrows"].size() << " arrows, dimension "
      << a["dimension"].get<std::size_t>() << " over F_" << a["field"].get<std::size_t>() << "\n";
  const auto& flags = a["flags"];
  auto show = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  out << "gl.dim: " << show(a["gl_dim"]) << "\n";
  out << "pd I^1(A): " << show(a["pd_I1"]) << "\n";
  for (const auto& [k, v] : flags.items()) {
    if (k == "gl_dim") continue;
    out << k << ": " << show(v) << "\n";
  }
  if (a.contains("maximality_witness"))
    out << "maximality witness: " << a["maximality_witness"]["text"].get<std::string>() << "\n";
  out << "universe: " << a["universe"]["size"].get<std::size_t>()
      << (a["universe"]["complete"].get<bool>() ? " indecomposables (complete)" : " (incomplete)") << "\n";
  out << "checks:\n";
  for (const auto& c : report.checks) {
    out << "  " << c.id << ": " << to_string(c.status);
    if (c.status == CheckStatus::skipped) out << " (" << c.details["reason"].get<std::string>() << ")";
    out << "\n";
  }
  out << "overall: " << (report.passed() ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace qhom
