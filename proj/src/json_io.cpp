#include "trialab/json_io.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "trialab/error.hpp"

namespace trialab {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kAlgebraSchema = "trialab/algebra@1";
constexpr const char* kMapSchema = "trialab/map@1";
constexpr const char* kSubspaceSchema = "trialab/subspace@1";
constexpr const char* kActionSchema = "trialab/action@1";
constexpr const char* kCrossedSchema = "trialab/crossed-module@1";

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(path + ": " + what);
}

void expect_object(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
}

void reject_unknown_fields(const Json& j, const std::string& path,
                           const std::set<std::string>& known) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!known.count(key)) fail(path + "." + key, "unknown field");
  }
}

std::string get_string(const Json& j, const std::string& path, const char* field) {
  if (!j.contains(field)) fail(path, std::string("missing field '") + field + "'");
  const Json& v = j.at(field);
  if (!v.is_string()) fail(path + "." + field, "expected a string");
  return v.get<std::string>();
}

int get_count(const Json& j, const std::string& path, const char* field) {
  if (!j.contains(field)) fail(path, std::string("missing field '") + field + "'");
  const Json& v = j.at(field);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    fail(path + "." + field, "expected a non-negative integer");
  return static_cast<int>(v.get<long long>());
}

int parse_index(const Json& v, const std::string& path, int dim) {
  if (!v.is_number_integer()) fail(path, "expected an integer basis index");
  const long long raw = v.get<long long>();
  if (raw < 0 || raw >= dim)
    fail(path, "basis index " + std::to_string(raw) + " out of range [0, " + std::to_string(dim) +
                   ")");
  return static_cast<int>(raw);
}

Rational parse_coeff(const Json& v, const std::string& path) {
  try {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return Rational::parse(v.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
  fail(path, "expected a rational coefficient as \"p/q\" or integer string");
}

std::vector<BinaryTensor::Entry> parse_binary_entries(const Json& arr, const std::string& path,
                                                      int dim) {
  if (!arr.is_array()) fail(path, "expected an array of [i, j, k, coefficient] entries");
  std::vector<BinaryTensor::Entry> entries;
  for (std::size_t n = 0; n < arr.size(); ++n) {
    const std::string epath = path + "[" + std::to_string(n) + "]";
    const Json& e = arr[n];
    if (!e.is_array() || e.size() != 4) fail(epath, "expected [i, j, k, coefficient]");
    entries.push_back({parse_index(e[0], epath + "[0]", dim), parse_index(e[1], epath + "[1]", dim),
                       parse_index(e[2], epath + "[2]", dim), parse_coeff(e[3], epath + "[3]")});
  }
  return entries;
}

std::vector<TernaryTensor::Entry> parse_ternary_entries(const Json& arr, const std::string& path,
                                                        int dim) {
  if (!arr.is_array()) fail(path, "expected an array of [i, j, k, l, coefficient] entries");
  std::vector<TernaryTensor::Entry> entries;
  for (std::size_t n = 0; n < arr.size(); ++n) {
    const std::string epath = path + "[" + std::to_string(n) + "]";
    const Json& e = arr[n];
    if (!e.is_array() || e.size() != 5) fail(epath, "expected [i, j, k, l, coefficient]");
    entries.push_back({parse_index(e[0], epath + "[0]", dim), parse_index(e[1], epath + "[1]", dim),
                       parse_index(e[2], epath + "[2]", dim), parse_index(e[3], epath + "[3]", dim),
                       parse_coeff(e[4], epath + "[4]")});
  }
  return entries;
}

Algebra parse_algebra(const Json& j, const std::string& path) {
  expect_object(j, path);
  reject_unknown_fields(j, path, {"schema", "kind", "dim", "basis", "products", "comment"});
  const AlgebraKind kind = [&] {
    try {
      return algebra_kind_from_string(get_string(j, path, "kind"));
    } catch (const Error& e) {
      fail(path + ".kind", e.what());
    }
  }();
  const int dim = get_count(j, path, "dim");

  std::vector<std::string> names;
  if (j.contains("basis")) {
    const Json& b = j.at("basis");
    if (!b.is_array()) fail(path + ".basis", "expected an array of labels");
    for (const Json& n : b) {
      if (!n.is_string()) fail(path + ".basis", "labels must be strings");
      names.push_back(n.get<std::string>());
    }
    if (static_cast<int>(names.size()) != dim)
      fail(path + ".basis", "label count does not match dim");
  }

  Json products = Json::object();
  if (j.contains("products")) {
    products = j.at("products");
    expect_object(products, path + ".products");
  }
  const auto binary_slot = [&](const char* slot) {
    if (!products.contains(slot)) return BinaryTensor(dim);
    try {
      return BinaryTensor::from_entries(
          dim, parse_binary_entries(products.at(slot), path + ".products." + slot, dim));
    } catch (const Error& e) {
      fail(path + ".products." + slot, e.what());
    }
  };

  switch (kind) {
    case AlgebraKind::Associative:
    case AlgebraKind::Leibniz: {
      reject_unknown_fields(products, path + ".products", {"bracket"});
      BinaryTensor t = binary_slot("bracket");
      return kind == AlgebraKind::Associative ? Algebra::associative(std::move(t), std::move(names))
                                              : Algebra::leibniz(std::move(t), std::move(names));
    }
    case AlgebraKind::Triassociative: {
      reject_unknown_fields(products, path + ".products", {"left", "middle", "right"});
      return Algebra::triassociative(binary_slot("left"), binary_slot("middle"),
                                     binary_slot("right"), std::move(names));
    }
    case AlgebraKind::TernaryLeibniz: {
      reject_unknown_fields(products, path + ".products", {"bracket3"});
      TernaryTensor t(dim);
      if (products.contains("bracket3")) {
        try {
          t = TernaryTensor::from_entries(
              dim, parse_ternary_entries(products.at("bracket3"), path + ".products.bracket3", dim));
        } catch (const Error& e) {
          fail(path + ".products.bracket3", e.what());
        }
      }
      return Algebra::ternary_leibniz(std::move(t), std::move(names));
    }
  }
  fail(path, "unknown algebra kind");
}

Mat parse_map(const Json& j, const std::string& path) {
  expect_object(j, path);
  reject_unknown_fields(j, path, {"schema", "rows", "cols", "entries", "comment"});
  const int rows = get_count(j, path, "rows");
  const int cols = get_count(j, path, "cols");
  Mat m = Mat::Zero(rows, cols);
  std::set<std::pair<int, int>> seen;
  if (j.contains("entries")) {
    const Json& arr = j.at("entries");
    if (!arr.is_array()) fail(path + ".entries", "expected an array of [row, col, coefficient]");
    for (std::size_t n = 0; n < arr.size(); ++n) {
      const std::string epath = path + ".entries[" + std::to_string(n) + "]";
      const Json& e = arr[n];
      if (!e.is_array() || e.size() != 3) fail(epath, "expected [row, col, coefficient]");
      const int r = parse_index(e[0], epath + "[0]", rows);
      const int c = parse_index(e[1], epath + "[1]", cols);
      if (!seen.insert({r, c}).second) fail(epath, "duplicate entry for the same cell");
      m(r, c) = parse_coeff(e[2], epath + "[2]");
    }
  }
  return m;
}

Subspace parse_subspace(const Json& j, const std::string& path) {
  expect_object(j, path);
  reject_unknown_fields(j, path, {"schema", "ambient_dim", "rows", "comment"});
  const int ambient = get_count(j, path, "ambient_dim");
  if (!j.contains("rows")) return Subspace(ambient);
  const Json& arr = j.at("rows");
  if (!arr.is_array()) fail(path + ".rows", "expected an array of coordinate rows");
  Mat rows(static_cast<Index>(arr.size()), ambient);
  for (std::size_t r = 0; r < arr.size(); ++r) {
    const std::string rpath = path + ".rows[" + std::to_string(r) + "]";
    const Json& row = arr[r];
    if (!row.is_array() || static_cast<int>(row.size()) != ambient)
      fail(rpath, "expected " + std::to_string(ambient) + " coordinates");
    for (int c = 0; c < ambient; ++c)
      rows(static_cast<Index>(r), c) = parse_coeff(row[c], rpath + "[" + std::to_string(c) + "]");
  }
  return Subspace::span_of_rows(rows);
}

Algebra parse_algebra_or_ref(const Json& j, const std::string& path,
                             const std::filesystem::path& base_dir);

// Accepted aliases for the triassociative cross tensor names; canonical
// serialization always uses the first spelling.
const std::vector<std::vector<std::string>>& cross_name_aliases(AlgebraKind kind) {
  static const std::vector<std::vector<std::string>> kLeibniz{{"mu1"}, {"mu2"}};
  static const std::vector<std::vector<std::string>> kTri{
      {"μ1_left", "mu1_left"},  {"μ1_mid", "mu1_mid"},   {"μ1_right", "mu1_right"},
      {"μ2_left", "mu2_left"},  {"μ2_mid", "mu2_mid"},   {"μ2_right", "mu2_right"}};
  static const std::vector<std::vector<std::string>> kTernary{{"m1"},  {"m2"},  {"m3"},
                                                              {"mp1"}, {"mp2"}, {"mp3"}};
  switch (kind) {
    case AlgebraKind::Leibniz: return kLeibniz;
    case AlgebraKind::Triassociative: return kTri;
    case AlgebraKind::TernaryLeibniz: return kTernary;
    case AlgebraKind::Associative: break;
  }
  throw Error("actions are not defined for the associative kind");
}

Action parse_action(const Json& j, const std::string& path, const std::filesystem::path& base_dir) {
  expect_object(j, path);
  reject_unknown_fields(j, path, {"schema", "kind", "acting", "acted", "cross", "comment"});
  const AlgebraKind kind = [&] {
    try {
      return algebra_kind_from_string(get_string(j, path, "kind"));
    } catch (const Error& e) {
      fail(path + ".kind", e.what());
    }
  }();
  if (kind == AlgebraKind::Associative)
    fail(path + ".kind", "actions are not defined for the associative kind");

  if (!j.contains("acting")) fail(path, "missing field 'acting'");
  if (!j.contains("acted")) fail(path, "missing field 'acted'");
  Algebra acting = parse_algebra_or_ref(j.at("acting"), path + ".acting", base_dir);
  Algebra acted = parse_algebra_or_ref(j.at("acted"), path + ".acted", base_dir);
  if (acting.kind() != kind) fail(path + ".acting", "algebra kind does not match the action kind");
  if (acted.kind() != kind) fail(path + ".acted", "algebra kind does not match the action kind");

  Json cross_json = Json::object();
  if (j.contains("cross")) {
    cross_json = j.at("cross");
    expect_object(cross_json, path + ".cross");
  }
  const auto& aliases = cross_name_aliases(kind);
  std::set<std::string> known;
  for (const auto& group : aliases) known.insert(group.begin(), group.end());
  reject_unknown_fields(cross_json, path + ".cross", known);

  const auto shapes = cross_tensor_shapes(kind);
  std::vector<CrossTensor> cross;
  for (std::size_t t = 0; t < shapes.size(); ++t) {
    const Json* found = nullptr;
    std::string found_name;
    for (const std::string& name : aliases[t]) {
      if (cross_json.contains(name)) {
        if (found) fail(path + ".cross", "tensor '" + found_name + "' given twice via alias");
        found = &cross_json.at(name);
        found_name = name;
      }
    }
    const auto [arity, layout] = shapes[t];
    CrossTensor tensor(arity, layout, acted.dim(), acting.dim());
    if (found) {
      const std::string tpath = path + ".cross." + found_name;
      if (!found->is_array()) fail(tpath, "expected an array of entries");
      std::vector<CrossTensor::Entry> entries;
      for (std::size_t n = 0; n < found->size(); ++n) {
        const std::string epath = tpath + "[" + std::to_string(n) + "]";
        const Json& e = (*found)[n];
        if (!e.is_array() || e.size() != static_cast<std::size_t>(arity) + 2)
          fail(epath, "expected " + std::to_string(arity) + " indices, an output index and a coefficient");
        CrossTensor::Entry entry{{0, 0, 0}, 0, Rational(0)};
        for (int s = 0; s < arity; ++s)
          entry.idx[s] = parse_index(e[s], epath + "[" + std::to_string(s) + "]",
                                     tensor.slot_dim(s));
        entry.out = parse_index(e[arity], epath + "[" + std::to_string(arity) + "]", acted.dim());
        entry.c = parse_coeff(e[arity + 1], epath + "[" + std::to_string(arity + 1) + "]");
        entries.push_back(entry);
      }
      try {
        tensor = CrossTensor::from_entries(arity, layout, acted.dim(), acting.dim(),
                                           std::move(entries));
      } catch (const Error& e) {
        fail(tpath, e.what());
      }
    }
    cross.push_back(std::move(tensor));
  }
  try {
    return Action(std::move(acting), std::move(acted), std::move(cross));
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

Algebra parse_algebra_or_ref(const Json& j, const std::string& path,
                             const std::filesystem::path& base_dir) {
  if (j.is_string()) {
    const std::filesystem::path ref = base_dir / j.get<std::string>();
    const Json doc = read_json_file(ref);
    expect_object(doc, ref.string());
    if (get_string(doc, ref.string(), "schema") != kAlgebraSchema)
      fail(ref.string(), "referenced file is not an algebra document");
    return parse_algebra(doc, ref.string());
  }
  return parse_algebra(j, path);
}

Mat parse_map_or_ref(const Json& j, const std::string& path,
                     const std::filesystem::path& base_dir) {
  if (j.is_string()) {
    const std::filesystem::path ref = base_dir / j.get<std::string>();
    const Json doc = read_json_file(ref);
    expect_object(doc, ref.string());
    if (get_string(doc, ref.string(), "schema") != kMapSchema)
      fail(ref.string(), "referenced file is not a map document");
    return parse_map(doc, ref.string());
  }
  return parse_map(j, path);
}

CrossedModule parse_crossed_module(const Json& j, const std::string& path,
                                   const std::filesystem::path& base_dir) {
  expect_object(j, path);
  reject_unknown_fields(j, path, {"schema", "action", "phi", "comment"});
  if (!j.contains("action")) fail(path, "missing field 'action'");
  if (!j.contains("phi")) fail(path, "missing field 'phi'");

  Action action = [&] {
    const Json& a = j.at("action");
    if (a.is_string()) {
      const std::filesystem::path ref = base_dir / a.get<std::string>();
      const Json doc = read_json_file(ref);
      expect_object(doc, ref.string());
      if (get_string(doc, ref.string(), "schema") != kActionSchema)
        fail(ref.string(), "referenced file is not an action document");
      return parse_action(doc, ref.string(), ref.parent_path());
    }
    return parse_action(a, path + ".action", base_dir);
  }();
  Mat phi = parse_map_or_ref(j.at("phi"), path + ".phi", base_dir);
  if (phi.rows() != action.acting().dim() || phi.cols() != action.acted().dim())
    fail(path + ".phi", "shape must be acting dim x acted dim");
  return {std::move(action), std::move(phi)};
}

// ---- serialization ----

Json coeff_json(const Rational& r) { return Json(r.str()); }

Json binary_entries_json(const BinaryTensor& t) {
  Json arr = Json::array();
  for (const auto& e : t.entries()) arr.push_back(Json::array({e.i, e.j, e.k, coeff_json(e.c)}));
  return arr;
}

Json ternary_entries_json(const TernaryTensor& t) {
  Json arr = Json::array();
  for (const auto& e : t.entries())
    arr.push_back(Json::array({e.i, e.j, e.k, e.l, coeff_json(e.c)}));
  return arr;
}

Json algebra_json(const Algebra& a) {
  Json j = Json::object();
  j["schema"] = kAlgebraSchema;
  j["kind"] = std::string(to_string(a.kind()));
  j["dim"] = a.dim();
  if (!a.has_default_basis_names()) j["basis"] = a.basis_names();
  Json products = Json::object();
  if (is_binary_kind(a.kind())) {
    for (Slot slot : a.slots())
      products[std::string(to_string(slot))] = binary_entries_json(a.product(slot));
  } else {
    products["bracket3"] = ternary_entries_json(a.ternary_product());
  }
  j["products"] = std::move(products);
  return j;
}

Json map_json(const Mat& m) {
  Json j = Json::object();
  j["schema"] = kMapSchema;
  j["rows"] = static_cast<int>(m.rows());
  j["cols"] = static_cast<int>(m.cols());
  Json entries = Json::array();
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero())
        entries.push_back(Json::array({static_cast<int>(r), static_cast<int>(c), coeff_json(m(r, c))}));
  j["entries"] = std::move(entries);
  return j;
}

Json subspace_json(const Subspace& s) {
  Json j = Json::object();
  j["schema"] = kSubspaceSchema;
  j["ambient_dim"] = static_cast<int>(s.ambient_dim());
  Json rows = Json::array();
  for (Index r = 0; r < s.dim(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < s.ambient_dim(); ++c) row.push_back(coeff_json(s.basis()(r, c)));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json action_json(const Action& act) {
  Json j = Json::object();
  j["schema"] = kActionSchema;
  j["kind"] = std::string(to_string(act.kind()));
  Json acting = algebra_json(act.acting());
  Json acted = algebra_json(act.acted());
  acting.erase("schema");
  acted.erase("schema");
  j["acting"] = std::move(acting);
  j["acted"] = std::move(acted);
  Json cross = Json::object();
  const auto& names = cross_tensor_names(act.kind());
  for (std::size_t t = 0; t < act.cross().size(); ++t) {
    const CrossTensor& tensor = act.cross()[t];
    Json arr = Json::array();
    for (const auto& e : tensor.entries()) {
      Json entry = Json::array();
      for (int s = 0; s < tensor.arity(); ++s) entry.push_back(e.idx[s]);
      entry.push_back(e.out);
      entry.push_back(coeff_json(e.c));
      arr.push_back(std::move(entry));
    }
    cross[names[t]] = std::move(arr);
  }
  j["cross"] = std::move(cross);
  return j;
}

Json crossed_json(const CrossedModule& cm) {
  Json j = Json::object();
  j["schema"] = kCrossedSchema;
  Json action = action_json(cm.action);
  action.erase("schema");
  j["action"] = std::move(action);
  Json phi = map_json(cm.phi);
  phi.erase("schema");
  j["phi"] = std::move(phi);
  return j;
}

}  // namespace

Document load_document(const std::filesystem::path& path) {
  const Json doc = read_json_file(path);
  expect_object(doc, path.string());
  const std::string schema = get_string(doc, path.string(), "schema");
  const std::filesystem::path base = path.parent_path();
  if (schema == kAlgebraSchema) return parse_algebra(doc, path.string());
  if (schema == kMapSchema) return parse_map(doc, path.string());
  if (schema == kSubspaceSchema) return parse_subspace(doc, path.string());
  if (schema == kActionSchema) return parse_action(doc, path.string(), base);
  if (schema == kCrossedSchema) return parse_crossed_module(doc, path.string(), base);
  fail(path.string() + ".schema", "unknown schema tag '" + schema + "'");
}

namespace {

template <typename T>
T expect_type(Document doc, const std::filesystem::path& path, const char* what) {
  if (auto* value = std::get_if<T>(&doc)) return std::move(*value);
  throw Error(path.string() + ": expected a " + what + " document");
}

}  // namespace

Algebra load_algebra(const std::filesystem::path& path) {
  return expect_type<Algebra>(load_document(path), path, "algebra");
}
Mat load_map(const std::filesystem::path& path) {
  return expect_type<Mat>(load_document(path), path, "map");
}
Subspace load_subspace(const std::filesystem::path& path) {
  return expect_type<Subspace>(load_document(path), path, "subspace");
}
Action load_action(const std::filesystem::path& path) {
  return expect_type<Action>(load_document(path), path, "action");
}
CrossedModule load_crossed_module(const std::filesystem::path& path) {
  return expect_type<CrossedModule>(load_document(path), path, "crossed-module");
}

namespace {

bool all_primitive(const Json& arr) {
  for (const Json& v : arr)
    if (v.is_object() || v.is_array()) return false;
  return true;
}

// Two-space indent, fixed key order (insertion order of the builders above),
// entry arrays on one line. This rendering is the byte-stable contract.
void write_canonical(std::ostream& os, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) os << ",\n";
      first = false;
      os << inner << Json(key).dump() << ": ";
      write_canonical(os, value, indent + 2);
    }
    os << "\n" << pad << "}";
    return;
  }
  if (j.is_array()) {
    if (j.empty()) {
      os << "[]";
      return;
    }
    if (all_primitive(j)) {
      os << "[";
      bool first = true;
      for (const Json& v : j) {
        if (!first) os << ", ";
        first = false;
        os << v.dump();
      }
      os << "]";
      return;
    }
    os << "[\n";
    bool first = true;
    for (const Json& v : j) {
      if (!first) os << ",\n";
      first = false;
      os << inner;
      write_canonical(os, v, indent + 2);
    }
    os << "\n" << pad << "]";
    return;
  }
  os << j.dump();
}

}  // namespace

std::string document_to_text(const Document& doc) {
  const Json j = std::visit(
      [](const auto& value) -> Json {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, Algebra>) return algebra_json(value);
        if constexpr (std::is_same_v<T, Mat>) return map_json(value);
        if constexpr (std::is_same_v<T, Subspace>) return subspace_json(value);
        if constexpr (std::is_same_v<T, Action>) return action_json(value);
        if constexpr (std::is_same_v<T, CrossedModule>) return crossed_json(value);
      },
      doc);
  std::ostringstream os;
  write_canonical(os, j, 0);
  os << "\n";
  return os.str();
}

void save_document(const Document& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(path.string() + ": cannot open file for writing");
  out << document_to_text(doc);
  if (!out) throw Error(path.string() + ": write failed");
}

}  // namespace trialab
