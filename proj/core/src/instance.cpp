#include "tri3/instance.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "tri3/errors.hpp"

namespace tri3 {

namespace {

using json = nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void schema_error(const std::string& source, const std::string& path, const std::string& msg) {
  throw ParseError(source + ": " + path + ": " + msg);
}

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  const json& member(const json& obj, const std::string& key, const std::string& path) const {
    if (!obj.is_object()) schema_error(source_, path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) schema_error(source_, path, "missing key \"" + key + "\"");
    return *it;
  }

  std::size_t count(const json& v, const std::string& path) const {
    if (!v.is_number_integer() || v.get<long long>() < 0) schema_error(source_, path, "expected a non-negative integer");
    return v.get<std::size_t>();
  }

  std::string text(const json& v, const std::string& path) const {
    if (!v.is_string()) schema_error(source_, path, "expected a string");
    return v.get<std::string>();
  }

  Rational rational(const json& v, const std::string& path) const {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) schema_error(source_, path, "expected a rational string \"p\" or \"p/q\"");
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      schema_error(source_, path, e.what());
    }
  }

  Tensor3 tensor(const json* entries, std::size_t n0, std::size_t n1, std::size_t n2, const std::string& path) const {
    Tensor3 t(n0, n1, n2);
    if (entries == nullptr) return t;
    if (!entries->is_array()) schema_error(source_, path, "expected an array of [i, j, k, \"q\"] entries");
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < entries->size(); ++e) {
      const json& entry = (*entries)[e];
      const std::string at = path + "[" + std::to_string(e) + "]";
      if (!entry.is_array() || entry.size() != 4) schema_error(source_, at, "expected [i, j, k, \"q\"]");
      const std::size_t i = count(entry[0], at + "[0]"), j = count(entry[1], at + "[1]"), k = count(entry[2], at + "[2]");
      if (i >= n0 || j >= n1 || k >= n2)
        schema_error(source_, at,
                     "index out of range for shape (" + std::to_string(n0) + "," + std::to_string(n1) + "," +
                         std::to_string(n2) + ")");
      if (!seen.emplace(i, j, k).second) schema_error(source_, at, "duplicate entry");
      t(i, j, k) = rational(entry[3], at + "[3]");
    }
    return t;
  }

  static const json* optional_member(const json& obj, const std::string& key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
  }

  std::shared_ptr<const StructureAlgebra> algebra(const json& root, const std::string& name) const {
    const std::string path = "algebras." + name;
    const json& obj = member(member(root, "algebras", "$"), name, "algebras");
    auto alg = std::make_shared<StructureAlgebra>();
    alg->name = name;
    alg->dim = count(member(obj, "dim", path), path + ".dim");
    alg->mult = tensor(optional_member(obj, "mult"), alg->dim, alg->dim, alg->dim, path + ".mult");
    if (const json* unit = optional_member(obj, "unit")) {
      if (!unit->is_array() || unit->size() != alg->dim)
        schema_error(source_, path + ".unit", "expected an array of " + std::to_string(alg->dim) + " rationals");
      Vector u(alg->dim);
      for (std::size_t i = 0; i < alg->dim; ++i) u[i] = rational((*unit)[i], path + ".unit[" + std::to_string(i) + "]");
      alg->unit = std::move(u);
    }
    return alg;
  }

  std::shared_ptr<const Bimodule> bimodule(const json& root, const std::string& name,
                                           const std::map<std::string, std::shared_ptr<const StructureAlgebra>>& algs,
                                           const std::string& expected_left, const std::string& expected_right,
                                           ValidationReport& refs) const {
    const std::string path = "modules." + name;
    const json& obj = member(member(root, "modules", "$"), name, "modules");
    const std::string left = text(member(obj, "left", path), path + ".left");
    const std::string right = text(member(obj, "right", path), path + ".right");
    auto lookup = [&](const std::string& n, const std::string& at) {
      auto it = algs.find(n);
      if (it == algs.end()) schema_error(source_, at, "unknown algebra \"" + n + "\"");
      return it->second;
    };
    auto mod = std::make_shared<Bimodule>();
    mod->name = name;
    mod->left = lookup(left, path + ".left");
    mod->right = lookup(right, path + ".right");
    if (left != expected_left || right != expected_right)
      refs.add(name + ": module references", {},
               "declared over (" + left + "," + right + "), required over (" + expected_left + "," + expected_right +
                   ")");
    mod->dim = count(member(obj, "dim", path), path + ".dim");
    mod->left_action =
        tensor(optional_member(obj, "left_action"), mod->left->dim, mod->dim, mod->dim, path + ".left_action");
    mod->right_action =
        tensor(optional_member(obj, "right_action"), mod->dim, mod->right->dim, mod->dim, path + ".right_action");
    return mod;
  }

 private:
  std::string source_;
};

void append_entries(std::ostringstream& os, const Tensor3& t) {
  os << '[';
  bool first = true;
  for (std::size_t i = 0; i < t.extent(0); ++i)
    for (std::size_t j = 0; j < t.extent(1); ++j)
      for (std::size_t k = 0; k < t.extent(2); ++k) {
        if (t(i, j, k).is_zero()) continue;
        os << (first ? "" : ", ") << '[' << i << ", " << j << ", " << k << ", \"" << t(i, j, k).to_string() << "\"]";
        first = false;
      }
  os << ']';
}

void append_algebra(std::ostringstream& os, const StructureAlgebra& alg) {
  os << "{\"dim\": " << alg.dim << ", \"mult\": ";
  append_entries(os, alg.mult);
  if (alg.unit) {
    os << ", \"unit\": [";
    for (std::size_t i = 0; i < alg.unit->size(); ++i) os << (i ? ", " : "") << '"' << (*alg.unit)[i] << '"';
    os << ']';
  }
  os << '}';
}

void append_module(std::ostringstream& os, const Bimodule& mod, const char* left, const char* right) {
  os << "{\"left\": \"" << left << "\", \"right\": \"" << right << "\", \"dim\": " << mod.dim
     << ",\n      \"left_action\": ";
  append_entries(os, mod.left_action);
  os << ",\n      \"right_action\": ";
  append_entries(os, mod.right_action);
  os << '}';
}

}  // namespace

TriSystem parse_instance_text(std::string_view text, const std::string& source) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON (" +
                         e.what() + ")",
                     line, col);
  }
  if (!root.is_object()) schema_error(source, "$", "expected a JSON object");

  const Reader rd(source);
  std::map<std::string, std::shared_ptr<const StructureAlgebra>> algs;
  for (const char* name : {"A", "B", "C"}) algs[name] = rd.algebra(root, name);

  ValidationReport refs;
  auto M = rd.bimodule(root, "M", algs, "A", "B", refs);
  auto N = rd.bimodule(root, "N", algs, "B", "C", refs);
  auto P = rd.bimodule(root, "P", algs, "A", "C", refs);
  if (!refs.ok()) throw ValidationError(source + ": module references are inconsistent", refs);

  auto mu = std::make_shared<Pairing>();
  mu->module_m = M;
  mu->module_n = N;
  mu->module_p = P;
  const json* pairing = Reader::optional_member(root, "pairing");
  const json* entries = nullptr;
  if (pairing != nullptr) {
    if (!pairing->is_object()) schema_error(source, "pairing", "expected an object");
    entries = Reader::optional_member(*pairing, "entries");
  }
  mu->tensor = rd.tensor(entries, M->dim, N->dim, P->dim, "pairing.entries");

  try {
    return make_system(algs["A"], algs["B"], algs["C"], M, N, P, mu);
  } catch (const ValidationError& e) {
    throw ValidationError(source + ": " + e.what(), e.report());
  }
}

TriSystem parse_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open instance file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading instance file '" + path.string() + "'");
  return parse_instance_text(buf.str(), path.string());
}

std::string write_instance(const TriSystem& sys) {
  std::ostringstream os;
  os << "{\n  \"algebras\": {\n    \"A\": ";
  append_algebra(os, *sys.A);
  os << ",\n    \"B\": ";
  append_algebra(os, *sys.B);
  os << ",\n    \"C\": ";
  append_algebra(os, *sys.C);
  os << "\n  },\n  \"modules\": {\n    \"M\": ";
  append_module(os, *sys.M, "A", "B");
  os << ",\n    \"N\": ";
  append_module(os, *sys.N, "B", "C");
  os << ",\n    \"P\": ";
  append_module(os, *sys.P, "A", "C");
  os << "\n  },\n  \"pairing\": {\"entries\": ";
  append_entries(os, sys.mu->tensor);
  os << "}\n}\n";
  return os.str();
}

}  // namespace tri3
