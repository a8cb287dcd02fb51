#include "qhom/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "qhom/errors.hpp"

namespace qhom {

using nlohmann::json;

Representation representation_from_json(const AlgebraPtr& a, const json& j) {
  const auto& q = a->quiver();
  if (!j.is_object()) throw SpecError("representation: expected a JSON object");
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  if (j.contains("dims")) {
    for (const auto& [label, d] : j.at("dims").items()) {
      const auto v = q.find_vertex(label);
      if (!v) throw SpecError("representation: unknown vertex '" + label + "'");
      if (!d.is_number_integer() || d.get<std::int64_t>() < 0) {
        throw SpecError("representation: dimension at '" + label + "' must be a nonnegative integer");
      }
      dims[*v] = d.get<std::size_t>();
    }
  }
  std::vector<Matrix> maps;
  for (const auto& arr : q.arrows()) maps.emplace_back(dims[arr.target], dims[arr.source], a->field());
  if (j.contains("maps")) {
    for (const auto& [name, rows] : j.at("maps").items()) {
      const auto ai = q.find_arrow(name);
      if (!ai) throw SpecError("representation: unknown arrow '" + name + "'");
      const auto& arr = q.arrow(*ai);
      if (!rows.is_array() || rows.size() != dims[arr.target]) {
        throw SpecError("representation: matrix for '" + name + "' must have " + std::to_string(dims[arr.target]) +
                        " rows");
      }
      std::vector<std::vector<std::int64_t>> data;
      for (const auto& row : rows) {
        if (!row.is_array() || row.size() != dims[arr.source]) {
          throw SpecError("representation: matrix for '" + name + "' must have " + std::to_string(dims[arr.source]) +
                          " columns");
        }
        std::vector<std::int64_t> r;
        for (const auto& e : row) {
          if (!e.is_number_integer()) throw SpecError("representation: matrix entries must be integers");
          r.push_back(e.get<std::int64_t>());
        }
        data.push_back(std::move(r));
      }
      maps[*ai] = Matrix::from_rows(data, dims[arr.source], a->field());
    }
  }
  try {
    return Representation(a, std::move(dims), std::move(maps));
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
}

nlohmann::ordered_json representation_to_json(const Representation& m) {
  const auto& q = m.algebra()->quiver();
  nlohmann::ordered_json j;
  nlohmann::ordered_json dims = nlohmann::ordered_json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) dims[q.label(v)] = m.dim(v);
  nlohmann::ordered_json maps = nlohmann::ordered_json::object();
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& mat = m.map(ai);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      const auto row = mat.row(r);
      rows.push_back(std::vector<Scalar>(row.begin(), row.end()));
    }
    maps[q.arrow(ai).name] = rows;
  }
  j["dims"] = dims;
  j["maps"] = maps;
  return j;
}

Representation load_representation(const AlgebraPtr& a, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecError("syntax error in '" + path + "': " + e.what());
  }
  return representation_from_json(a, j);
}

NamedModule parse_module(const AlgebraPtr& a, std::string_view name, const Universe& universe) {
  if (name.empty()) throw SpecError("empty module name");
  const std::string text(name);
  if (name.front() == '@') return {text, load_representation(a, text.substr(1))};
  if (name.front() == 'M') {
    if (!universe.complete) throw SpecError("interval names like '" + text + "' need a Nakayama algebra");
    if (auto k = universe.find_name(name)) return universe.objects[*k];
    throw SpecError("no indecomposable named '" + text + "'");
  }
  const auto v = a->quiver().find_vertex(name.substr(1));
  if (!v) throw SpecError("unknown module '" + text + "'");
  switch (name.front()) {
    case 'P':
      return {text, standard_module(a, StandardKind::projective, *v)};
    case 'I':
      return {text, standard_module(a, StandardKind::injective, *v)};
    case 'S':
      return {text, standard_module(a, StandardKind::simple, *v)};
    default:
      throw SpecError("unknown module '" + text + "'");
  }
}

SubcategorySet parse_subcategory(const AlgebraPtr& a, std::string_view text, const Universe& universe,
                                 std::uint64_t seed) {
  SubcategorySet c{a, {}};
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    auto m = parse_module(a, std::string_view(line).substr(b, e - b + 1), universe);
    if (!is_indecomposable(m.module, seed))
      throw SpecError("subcategory object '" + m.name + "' is not indecomposable");
    if (auto k = c.find(m.module, seed)) {
      throw SpecError("subcategory objects '" + c.objects[*k].name + "' and '" + m.name + "' are isomorphic");
    }
    c.objects.push_back(std::move(m));
  }
  return c;
}

SubcategorySet load_subcategory(const AlgebraPtr& a, const std::string& path, const Universe& universe,
                                std::uint64_t seed) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_subcategory(a, buf.str(), universe, seed);
}

std::string format_dims(const std::vector<std::size_t>& dims) {
  std::string out = "(";
  for (std::size_t v = 0; v < dims.size(); ++v) out += (v ? "," : "") + std::to_string(dims[v]);
  return out + ")";
}

std::string format_term(const BoundAlgebra& a, char letter, const std::vector<std::size_t>& vertices) {
  if (vertices.empty()) return "0";
  std::map<std::size_t, std::size_t> count;
  for (auto v : vertices) ++count[v];
  std::string out;
  for (const auto& [v, k] : count) {
    if (!out.empty()) out += " ⊕ ";
    out += letter + a.quiver().label(v);
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::string display_name(const Representation& m, const Universe& universe, std::uint64_t seed) {
  if (m.is_zero()) return "0";
  if (universe.complete) {
    if (auto k = universe.find(m, seed)) return universe.objects[*k].name;
  }
  const auto& a = m.algebra();
  for (std::size_t v = 0; v < a->vertex_count(); ++v) {
    const auto& label = a->quiver().label(v);
    if (is_isomorphic(m, standard_module(a, StandardKind::simple, v), seed)) return "S" + label;
    if (is_isomorphic(m, standard_module(a, StandardKind::projective, v), seed)) return "P" + label;
    if (is_isomorphic(m, standard_module(a, StandardKind::injective, v), seed)) return "I" + label;
  }
  return format_dims(m.dims());
}

std::string format_resolution(const Resolution& r, const std::string& target_name) {
  const auto& a = *r.target.algebra();
  std::ostringstream out;
  std::vector<std::string> names;
  std::vector<std::string> labels;
  if (r.kind == ResolutionKind::projective) {
    for (std::size_t k = r.terms.size(); k-- > 0;) {
      names.push_back(format_term(a, 'P', r.term_vertices[k]));
      labels.push_back("P_" + std::to_string(k));
    }
    out << (r.truncated ? "… → " : "0 → ");
    for (const auto& n : names) out << n << " → ";
    out << target_name << " → 0\n";
  } else {
    for (std::size_t k = 0; k < r.terms.size(); ++k) {
      names.push_back(format_term(a, 'I', r.term_vertices[k]));
      labels.push_back("I^" + std::to_string(k));
    }
    out << "0 → " << target_name;
    for (const auto& n : names) out << " → " << n;
    out << (r.truncated ? " → …\n" : " → 0\n");
  }
  const std::size_t count = r.terms.size();
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t idx = r.kind == ResolutionKind::projective ? count - 1 - k : k;
    out << "  " << labels[k] << " = " << names[k] << "  dims " << format_dims(r.terms[idx].dims()) << "\n";
  }
  out << "  " << target_name << "  dims " << format_dims(r.target.dims()) << "\n";
  if (r.truncated) out << "  truncated at cap " << r.length() << "; dimension ≥ " << r.length() << "\n";
  return out.str();
}

}  // namespace qhom
