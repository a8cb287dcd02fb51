#include "qhom/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "qhom/algebra.hpp"
#include "qhom/approx.hpp"
#include "qhom/catalog.hpp"
#include "qhom/errors.hpp"
#include "qhom/homology.hpp"
#include "qhom/io.hpp"
#include "qhom/verify.hpp"

namespace qhom::cli {
namespace {

struct Options {
  std::string spec;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::size_t> cap;
  std::string m;
  std::string n;
  std::size_t degree = 1;
  bool injective = false;
  std::string side;
  std::string cat = "trivial";
  bool max_orthogonal = false;
  std::size_t order = 1;
  std::string json_out;
};

struct Session {
  AlgebraPtr algebra;
  Universe universe;
  std::size_t cap;
};

Session open(const Options& o) {
  auto a = load_algebra(o.spec);
  auto u = enumerate_indecomposables(a);
  return {a, std::move(u), o.cap.value_or(default_cap(*a))};
}

// Pads to `width` code points; setw counts bytes and "≥" is three.
std::string pad(const std::string& text, std::size_t width) {
  const auto points = static_cast<std::size_t>(
      std::count_if(text.begin(), text.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
  return points >= width ? text + " " : text + std::string(width - points, ' ');
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string yes_no(const std::optional<bool>& b) { return b ? yes_no(*b) : "unknown"; }

// "M1:2 ⊕ P3^2"; summands named as in display_name.
std::string sum_name(const Representation& m, const Universe& u, std::uint64_t seed) {
  if (m.is_zero()) return "0";
  std::vector<std::string> order;
  std::map<std::string, std::size_t> count;
  for (const auto& part : decompose(m, seed)) {
    const auto name = display_name(part, u, seed);
    if (count[name]++ == 0) order.push_back(name);
  }
  std::string out;
  for (const auto& name : order) {
    if (!out.empty()) out += " ⊕ ";
    out += name;
    if (count[name] > 1) out += "^" + std::to_string(count[name]);
  }
  return out;
}

SubcategorySet subcategory(const Session& s, const Options& o) {
  if (o.cat == "trivial") {
    auto c = trivial_candidate(s.algebra, o.seed);
    return s.universe.complete ? with_universe_names(c, s.universe, o.seed) : c;
  }
  return load_subcategory(s.algebra, o.cat, s.universe, o.seed);
}

int cmd_info(const Options& o, std::ostream& out) {
  const auto s = open(o);
  const auto& a = *s.algebra;
  const auto& q = a.quiver();
  out << "field: F_" << a.field().modulus() << "\n";
  out << "vertices:";
  for (const auto& v : q.vertices()) out << " " << v;
  out << "\narrows:\n";
  for (const auto& arr : q.arrows())
    out << "  " << arr.name << ": " << q.label(arr.source) << " → " << q.label(arr.target) << "\n";
  out << "relations:";
  if (a.relations().empty()) out << " none";
  for (const auto& r : a.relations()) out << " " << a.path_name(r);
  out << "\ndimension: " << a.dimension() << "\n";
  out << "cartan:\n";
  for (const auto& row : cartan_matrix(a)) {
    out << " ";
    for (auto x : row) out << " " << std::setw(2) << x;
    out << "\n";
  }
  const auto f = structure_flags(s.algebra, s.cap, o.seed);
  out << "gl.dim: " << f.gl_dim.str() << "\n";
  out << "id A: " << f.id_regular.str() << "   id A^op: " << f.id_regular_op.str() << "\n";
  out << "pd I^1(A): " << (f.pd_i1 ? f.pd_i1->str() : std::string("- (I^1 = 0)")) << "\n";
  out << "nakayama: " << yes_no(f.nakayama) << "\n";
  out << "1-Gorenstein: " << yes_no(f.gorenstein_1) << "\n";
  out << "auslander algebra: " << yes_no(f.auslander_algebra) << "\n";
  out << "almost hereditary: " << yes_no(f.almost_hereditary) << "\n";
  out << "trivial subcategory maximal 1-orthogonal: " << yes_no(f.trivial_is_maximal_1_orthogonal) << "\n";
  if (f.maximality_witness) out << "  witness: " << f.maximality_witness->describe() << "\n";
  return ok;
}

int cmd_indecomposables(const Options& o, std::ostream& out, std::ostream& err) {
  const auto s = open(o);
  if (!s.universe.complete) {
    err << "error: indecomposables are only enumerated for Nakayama algebras\n";
    return unsupported;
  }
  std::size_t width = 4;
  for (const auto& obj : s.universe.objects) width = std::max(width, obj.name.size());
  out << pad("name", width + 2) << pad("dims", 14) << pad("pd", 8) << "id\n";
  bool truncated = false;
  for (const auto& row : describe_universe(s.universe, s.cap)) {
    std::string line =
        pad(row.name, width + 2) + pad(format_dims(row.dims), 14) + pad(row.pd.str(), 8) + pad(row.id.str(), 8);
    if (row.projective) line += " projective";
    if (row.injective) line += " injective";
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
    truncated = truncated || !row.pd.finite() || !row.id.finite();
  }
  out << s.universe.size() << " indecomposables\n";
  if (truncated) out << "note: \"≥ " << s.cap << "\" marks a resolution cut off at the cap\n";
  return ok;
}

int cmd_resolve(const Options& o, std::ostream& out, std::ostream& err) {
  const auto s = open(o);
  const auto m = parse_module(s.algebra, o.m, s.universe);
  const auto kind = o.injective ? ResolutionKind::injective : ResolutionKind::projective;
  const auto r = minimal_resolution(m.module, kind, s.cap);
  out << format_resolution(r, m.name);
  if (r.truncated) {
    err << "error: resolution of " << m.name << " does not stop within cap " << s.cap << "\n";
    return unsupported;
  }
  return ok;
}

int cmd_ext(const Options& o, std::ostream& out, std::ostream& err) {
  const auto s = open(o);
  const auto m = parse_module(s.algebra, o.m, s.universe);
  const auto n = parse_module(s.algebra, o.n, s.universe);
  const auto proj = ext_dim(m.module, n.module, o.degree, s.cap);
  const auto inj = ext_dim_via_injective(m.module, n.module, o.degree, s.cap);
  out << "Ext^" << o.degree << "(" << m.name << ", " << n.name << ") = " << proj << "\n";
  out << "  projective route: " << proj << "\n";
  out << "  injective route:  " << inj << "\n";
  if (proj != inj) {
    err << "error: the two routes disagree\n";
    return check_failed;
  }
  return ok;
}

int cmd_approx(const Options& o, std::ostream& out) {
  const auto s = open(o);
  const auto m = parse_module(s.algebra, o.m, s.universe);
  const auto c = subcategory(s, o);
  const auto side = o.side == "left" ? Side::left : Side::right;
  const auto f = minimal_approximation(c, m.module, side, o.seed);
  const auto parts = morphism_parts(f);

  const auto c_side = side == Side::right ? f.source() : f.target();
  const std::string c_label = side == Side::right ? "C_M" : "C^M";
  std::vector<std::string> seq;
  if (!parts.kernel.is_zero()) seq.push_back(sum_name(parts.kernel, s.universe, o.seed));
  if (side == Side::right) {
    seq.push_back(sum_name(c_side, s.universe, o.seed));
    seq.push_back(m.name);
  } else {
    seq.push_back(m.name);
    seq.push_back(sum_name(c_side, s.universe, o.seed));
  }
  if (!parts.cokernel.is_zero()) seq.push_back(sum_name(parts.cokernel, s.universe, o.seed));
  out << "0";
  for (const auto& t : seq) out << " → " << t;
  out << " → 0\n";
  out << "  " << c_label << " = " << sum_name(c_side, s.universe, o.seed) << "  dims " << format_dims(c_side.dims())
      << "\n";
  out << "  kernel dims " << format_dims(parts.kernel.dims()) << ", cokernel dims "
      << format_dims(parts.cokernel.dims()) << "\n";
  out << "  " << (side == Side::right ? "right" : "left")
      << " approximation: " << yes_no(is_approximation(f, c, side, o.seed))
      << ", minimal: " << yes_no(is_minimal(f, side, o.seed)) << "\n";
  return ok;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const auto s = open(o);
  if (!s.universe.complete) {
    err << "error: maximality needs the complete list of indecomposables (Nakayama algebras only)\n";
    return unsupported;
  }
  const auto c = subcategory(s, o);
  out << "C = {";
  for (std::size_t k = 0; k < c.size(); ++k) out << (k ? ", " : "") << c.objects[k].name;
  out << "}\n";
  const auto res = is_maximal_orthogonal(c, o.order, s.universe.objects, s.universe.complete, s.cap, o.seed);
  out << "maximal " << o.order << "-orthogonal: " << yes_no(res.maximal) << "\n";
  if (res.witness) out << "witness: " << res.witness->describe() << "\n";
  return res.maximal ? ok : check_failed;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto s = open(o);
  const auto report = verify_all(s.algebra, s.cap, o.seed);
  if (o.json_out == "-") {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << to_text(report);
    if (!o.json_out.empty()) {
      std::ofstream f(o.json_out);
      if (!f) {
        err << "error: cannot write '" << o.json_out << "'\n";
        return usage_error;
      }
      f << to_json(report).dump(2) << "\n";
    }
  }
  return report.passed() ? ok : check_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Homological algebra of bound quiver algebras with monomial relations", "qhom"};
  app.require_subcommand(1);
  app.add_option("--seed", o.seed, "Seed for randomized routines");

  auto spec = [&](CLI::App* sub) {
    sub->add_option("spec", o.spec, "Algebra spec (TOML)")->required()->check(CLI::ExistingFile);
    sub->fallthrough();
  };
  auto cap = [&](CLI::App* sub) {
    sub->add_option("--cap", o.cap, "Resolution length cap")->check(CLI::NonNegativeNumber);
  };
  auto cat = [&](CLI::App* sub) {
    sub->add_option("--cat", o.cat, "'trivial' or a file with one module name per line")->capture_default_str();
  };

  auto* info = app.add_subcommand("info", "Dimension, Cartan matrix and structure flags");
  spec(info);
  cap(info);
  auto* indec = app.add_subcommand("indecomposables", "List indecomposables with pd and id (Nakayama only)");
  spec(indec);
  cap(indec);
  auto* resolve = app.add_subcommand("resolve", "Print a minimal projective or injective resolution");
  spec(resolve);
  cap(resolve);
  resolve->add_option("-m", o.m, "Module name")->required();
  resolve->add_flag("--injective", o.injective, "Injective instead of projective resolution");
  auto* ext = app.add_subcommand("ext", "dim Ext^i(M, N) by both resolutions");
  spec(ext);
  cap(ext);
  ext->add_option("-m", o.m, "First argument")->required();
  ext->add_option("-n", o.n, "Second argument")->required();
  ext->add_option("-i", o.degree, "Degree")->required();
  auto* approx = app.add_subcommand("approx", "Minimal left or right approximation");
  spec(approx);
  approx->add_option("-m", o.m, "Module name")->required();
  approx->add_option("--side", o.side, "left or right")->required()->check(CLI::IsMember({"left", "right"}));
  cat(approx);
  auto* check = app.add_subcommand("check", "Maximal n-orthogonality verdict with witness");
  spec(check);
  cap(check);
  check->add_flag("--max-orthogonal", o.max_orthogonal, "Test maximal n-orthogonality")->required();
  check->add_option("--n", o.order, "n")->capture_default_str()->check(CLI::PositiveNumber);
  cat(check);
  auto* verify = app.add_subcommand("verify", "Run every check and print the report");
  spec(verify);
  cap(verify);
  verify->add_option("--json", o.json_out, "Also write the JSON report here ('-' for stdout only)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (*info) return cmd_info(o, out);
    if (*indec) return cmd_indecomposables(o, out, err);
    if (*resolve) return cmd_resolve(o, out, err);
    if (*ext) return cmd_ext(o, out, err);
    if (*approx) return cmd_approx(o, out);
    if (*check) return cmd_check(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << "\n";
    return unsupported;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return unsupported;
  } catch (const DecompositionError& e) {
    err << "error: " << e.what() << "\n";
    return unsupported;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
  return usage_error;
}

}  // namespace qhom::cli
