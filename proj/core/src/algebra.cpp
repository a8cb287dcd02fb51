#include "qhom/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <toml.hpp>

#include "qhom/errors.hpp"

namespace qhom {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) throw SpecError("duplicate vertex id");
  std::set<std::string> names;
  for (const auto& a : arrows_) {
    if (a.name.empty()) throw SpecError("arrow with empty name");
    if (!names.insert(a.name).second) throw SpecError("duplicate arrow name '" + a.name + "'");
    if (a.source >= vertices_.size() || a.target >= vertices_.size()) {
      throw SpecError("arrow '" + a.name + "' refers to an unknown vertex");
    }
  }
}

std::optional<std::size_t> Quiver::find_vertex(std::string_view label) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v] == label) return v;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::find_arrow(std::string_view name) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].name == name) return a;
  return std::nullopt;
}

Path compose(const Path& outer, const Path& inner) {
  if (inner.target != outer.source) throw std::invalid_argument("compose: paths are not composable");
  Path out{inner.source, outer.target, outer.arrows};
  out.arrows.insert(out.arrows.end(), inner.arrows.begin(), inner.arrows.end());
  return out;
}

bool contains_subword(const Path& path, const Path& word) noexcept {
  if (word.arrows.empty() || word.arrows.size() > path.arrows.size()) return false;
  return std::search(path.arrows.begin(), path.arrows.end(), word.arrows.begin(), word.arrows.end()) !=
         path.arrows.end();
}

// ---------------------------------------------------------------------------

struct BoundAlgebra::Pair {
  BoundAlgebra forward;
  BoundAlgebra backward;
};

namespace {

bool has_forbidden_prefix(const std::vector<std::size_t>& arrows, const std::vector<Path>& relations) {
  for (const auto& r : relations) {
    if (r.arrows.size() <= arrows.size() && std::equal(r.arrows.begin(), r.arrows.end(), arrows.begin())) {
      return true;
    }
  }
  return false;
}

}  // namespace

void BoundAlgebra::initialise(BoundAlgebra& a, Quiver quiver, std::vector<Path> relations, PrimeField field) {
  a.quiver_ = std::move(quiver);
  a.relations_ = std::move(relations);
  a.field_ = field;

  const auto& q = a.quiver_;
  std::size_t longest_relation = 0;
  for (const auto& r : a.relations_) longest_relation = std::max(longest_relation, r.length());
  const std::size_t bound = q.arrow_count() * (1 + longest_relation);

  std::vector<Path> level;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) level.push_back(Path::stationary(v));
  std::vector<Path> all = level;
  for (std::size_t len = 1; !level.empty(); ++len) {
    std::vector<Path> next;
    for (const auto& p : level) {
      for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
        const Arrow& arr = q.arrow(ai);
        if (arr.source != p.target) continue;
        Path ext{p.source, arr.target, {ai}};
        ext.arrows.insert(ext.arrows.end(), p.arrows.begin(), p.arrows.end());
        if (!has_forbidden_prefix(ext.arrows, a.relations_)) next.push_back(std::move(ext));
      }
    }
    if (!next.empty() && len > bound) {
      throw SpecError("ideal not admissible: relation-free paths of unbounded length");
    }
    auto names = [&](const Path& p) {
      std::vector<std::string> out;
      for (auto ai : p.arrows) out.push_back(q.arrow(ai).name);
      return out;
    };
    std::sort(next.begin(), next.end(), [&](const Path& x, const Path& y) { return names(x) < names(y); });
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  a.basis_ = std::move(all);

  const std::size_t n = q.vertex_count();
  a.between_.assign(n * n, {});
  for (const auto& p : a.basis_) a.between_[p.source * n + p.target].push_back(p);
}

AlgebraPtr BoundAlgebra::create(Quiver quiver, std::vector<Path> relations, Scalar characteristic) {
  if (!is_prime(characteristic) || characteristic >= (Scalar{1} << 31)) {
    throw SpecError("field characteristic " + std::to_string(characteristic) + " is not prime");
  }
  const PrimeField field(characteristic);
  for (const auto& r : relations) {
    if (r.length() < 2) throw SpecError("ideal not admissible: relation of length < 2");
    for (auto ai : r.arrows) {
      if (ai >= quiver.arrow_count()) throw SpecError("relation refers to an unknown arrow");
    }
    for (std::size_t k = 0; k + 1 < r.arrows.size(); ++k) {
      if (quiver.arrow(r.arrows[k]).source != quiver.arrow(r.arrows[k + 1]).target) {
        throw SpecError("relation word is not composable");
      }
    }
    if (r.source != quiver.arrow(r.arrows.back()).source || r.target != quiver.arrow(r.arrows.front()).target) {
      throw SpecError("relation endpoints do not match its arrows");
    }
  }

  std::vector<Arrow> rev_arrows;
  for (const auto& a : quiver.arrows()) rev_arrows.push_back(Arrow{a.name, a.target, a.source});
  Quiver rev_quiver(quiver.vertices(), std::move(rev_arrows));
  std::vector<Path> rev_relations;
  for (const auto& r : relations) {
    rev_relations.push_back(Path{r.target, r.source, {r.arrows.rbegin(), r.arrows.rend()}});
  }

  auto pair = std::make_shared<Pair>();
  initialise(pair->forward, std::move(quiver), std::move(relations), field);
  initialise(pair->backward, std::move(rev_quiver), std::move(rev_relations), field);
  pair->forward.twin_ = &pair->backward;
  pair->backward.twin_ = &pair->forward;
  pair->forward.owner_ = pair;
  pair->backward.owner_ = pair;
  return AlgebraPtr(pair, &pair->forward);
}

const std::vector<Path>& BoundAlgebra::paths_between(std::size_t from, std::size_t to) const {
  return between_.at(from * vertex_count() + to);
}

bool BoundAlgebra::survives(const Path& p) const noexcept {
  return std::none_of(relations_.begin(), relations_.end(), [&](const Path& r) { return contains_subword(p, r); });
}

std::size_t BoundAlgebra::loewy_length() const noexcept {
  std::size_t longest = 0;
  for (const auto& p : basis_) longest = std::max(longest, p.length());
  return longest + 1;
}

AlgebraPtr BoundAlgebra::opposite() const { return AlgebraPtr(owner_.lock(), twin_); }

Path BoundAlgebra::reversed(const Path& p) const {
  return Path{p.target, p.source, {p.arrows.rbegin(), p.arrows.rend()}};
}

std::string BoundAlgebra::path_name(const Path& p) const {
  if (p.is_stationary()) return "e" + quiver_.label(p.source);
  std::string out;
  for (auto ai : p.arrows) out += quiver_.arrow(ai).name;
  return out;
}

bool BoundAlgebra::same_as(const BoundAlgebra& other) const noexcept {
  return this == &other || (field_ == other.field_ && quiver_ == other.quiver_ && relations_ == other.relations_);
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) noexcept { return a == b || (a && b && a->same_as(*b)); }

const std::vector<Path>& path_basis(const BoundAlgebra& a) { return a.basis(); }

AlgebraPtr opposite(const AlgebraPtr& a) { return a->opposite(); }

bool is_nakayama(const BoundAlgebra& a) {
  const auto& q = a.quiver();
  const std::size_t n = q.vertex_count();
  if (n == 0) return false;
  std::vector<int> indeg(n, 0);
  std::vector<int> outdeg(n, 0);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& arr : q.arrows()) {
    ++outdeg[arr.source];
    ++indeg[arr.target];
    parent[find(arr.source)] = find(arr.target);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (indeg[v] > 1 || outdeg[v] > 1) return false;
    if (find(v) != find(0)) return false;
  }
  return true;
}

bool is_acyclic(const BoundAlgebra& a) {
  const auto& q = a.quiver();
  const std::size_t n = q.vertex_count();
  std::vector<int> indeg(n, 0);
  for (const auto& arr : q.arrows()) ++indeg[arr.target];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& arr : q.arrows()) {
      if (arr.source == v && --indeg[arr.target] == 0) ready.push_back(arr.target);
    }
  }
  return seen == n;
}

std::vector<std::vector<std::int64_t>> cartan_matrix(const BoundAlgebra& a) {
  const std::size_t n = a.vertex_count();
  std::vector<std::vector<std::int64_t>> c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) c[v][w] = static_cast<std::int64_t>(a.paths_between(w, v).size());
  return c;
}

// ---------------------------------------------------------------------------
// Spec file

namespace {

std::string vertex_label(const toml::node& node) {
  if (auto i = node.value<std::int64_t>()) return std::to_string(*i);
  if (auto s = node.value<std::string>()) return *s;
  throw SpecError("vertex ids must be integers or strings");
}

}  // namespace

AlgebraPtr parse_algebra(std::string_view spec_text) {
  toml::table doc;
  try {
    doc = toml::parse(spec_text);
  } catch (const toml::parse_error& e) {
    std::ostringstream os;
    os << "syntax error: " << e.description() << " (line " << e.source().begin.line << ")";
    throw SpecError(os.str());
  }

  const toml::table* alg = doc["algebra"].as_table();
  if (alg == nullptr) throw SpecError("missing [algebra] table");

  std::int64_t characteristic = 101;
  if (const auto* fld = alg->get("field")) {
    auto v = fld->value<std::int64_t>();
    if (!v) throw SpecError("field must be an integer");
    characteristic = *v;
  }
  if (characteristic < 2 || characteristic >= (std::int64_t{1} << 31) ||
      !is_prime(static_cast<std::uint64_t>(characteristic))) {
    throw SpecError("field characteristic " + std::to_string(characteristic) + " is not prime");
  }

  const toml::array* verts = alg->get_as<toml::array>("vertices");
  if (verts == nullptr) throw SpecError("[algebra] needs a 'vertices' array");
  std::vector<std::string> labels;
  for (const auto& node : *verts) labels.push_back(vertex_label(node));

  auto lookup_vertex = [&](const toml::node* node, const std::string& what) {
    if (node == nullptr) throw SpecError("arrow is missing '" + what + "'");
    const std::string label = vertex_label(*node);
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw SpecError("unknown vertex '" + label + "'");
    return static_cast<std::size_t>(it - labels.begin());
  };

  std::vector<Arrow> arrows;
  if (const toml::array* arr = doc.get_as<toml::array>("arrow")) {
    for (const auto& node : *arr) {
      const toml::table* t = node.as_table();
      if (t == nullptr) throw SpecError("[[arrow]] entries must be tables");
      auto name = t->get_as<std::string>("name");
      if (name == nullptr) throw SpecError("arrow is missing 'name'");
      arrows.push_back(
          Arrow{name->get(), lookup_vertex(t->get("source"), "source"), lookup_vertex(t->get("target"), "target")});
    }
  }
  Quiver quiver(std::move(labels), std::move(arrows));

  const toml::array* rels = alg->get_as<toml::array>("relations");
  if (rels == nullptr) rels = doc.get_as<toml::array>("relations");
  std::vector<Path> relations;
  if (rels != nullptr) {
    for (const auto& node : *rels) {
      const toml::array* word = node.as_array();
      if (word == nullptr) throw SpecError("relations must be arrays of arrow names");
      std::vector<std::size_t> ids;
      for (const auto& w : *word) {
        auto name = w.value<std::string>();
        if (!name) throw SpecError("relation entries must be arrow names");
        auto ai = quiver.find_arrow(*name);
        if (!ai) throw SpecError("unknown arrow '" + *name + "' in relation");
        ids.push_back(*ai);
      }
      if (ids.size() < 2) throw SpecError("ideal not admissible: relation of length < 2");
      for (std::size_t k = 0; k + 1 < ids.size(); ++k) {
        if (quiver.arrow(ids[k]).source != quiver.arrow(ids[k + 1]).target) {
          throw SpecError("relation word is not composable");
        }
      }
      relations.push_back(Path{quiver.arrow(ids.back()).source, quiver.arrow(ids.front()).target, ids});
    }
  }
  return BoundAlgebra::create(std::move(quiver), std::move(relations), static_cast<Scalar>(characteristic));
}

AlgebraPtr load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open algebra spec '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

AlgebraPtr make_example_algebra(std::size_t n, Scalar characteristic) {
  if (n < 3) throw std::invalid_argument("make_example_algebra needs n >= 3");
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<Arrow> arrows;
  for (std::size_t i = 1; i < n; ++i) arrows.push_back(Arrow{"a" + std::to_string(i), i, i - 1});
  Path rel{n - 1, 0, {}};
  for (std::size_t i = 0; i + 1 < n; ++i) rel.arrows.push_back(i);
  return BoundAlgebra::create(Quiver(std::move(labels), std::move(arrows)), {rel}, characteristic);
}

AlgebraPtr make_linear_algebra(std::size_t n, Scalar characteristic) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<Arrow> arrows;
  for (std::size_t i = 1; i < n; ++i) arrows.push_back(Arrow{"a" + std::to_string(i), i, i - 1});
  return BoundAlgebra::create(Quiver(std::move(labels), std::move(arrows)), {}, characteristic);
}

AlgebraPtr make_cyclic_nakayama(std::size_t n, std::size_t kill, Scalar characteristic) {
  if (n == 0 || kill < 2) throw std::invalid_argument("make_cyclic_nakayama needs n >= 1 and kill >= 2");
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < n; ++i) arrows.push_back(Arrow{"c" + std::to_string(i + 1), i, (i + 1) % n});
  // Every path of length `kill`, one per starting vertex.
  std::vector<Path> relations;
  for (std::size_t start = 0; start < n; ++start) {
    Path p{start, (start + kill) % n, {}};
    for (std::size_t k = kill; k-- > 0;) p.arrows.push_back((start + k) % n);
    relations.push_back(std::move(p));
  }
  return BoundAlgebra::create(Quiver(std::move(labels), std::move(arrows)), std::move(relations), characteristic);
}

}  // namespace qhom
