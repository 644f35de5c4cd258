#include "tqftdef/serialization.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json_format.hpp"
#include "tqftdef/error.hpp"

namespace tqftdef {

using nlohmann::json;

namespace detail {
namespace {

bool is_flat(const json& value) {
  for (const auto& item : value) {
    if (item.is_structured()) return false;
  }
  return true;
}

void write(const json& value, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  if (value.is_object()) {
    if (value.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, item] : value.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + json(key).dump() + ": ";
      write(item, out, indent + 2);
    }
    out += "\n" + close + "}";
  } else if (value.is_array()) {
    if (value.empty() || is_flat(value)) {
      out += "[";
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i) out += ", ";
        out += value[i].dump();
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      write(value[i], out, indent + 2);
    }
    out += "\n" + close + "]";
  } else {
    out += value.dump();
  }
}

}  // namespace

std::string pretty_json(const json& value) {
  std::string out;
  write(value, out, 0);
  out += "\n";
  return out;
}

}  // namespace detail

namespace {

[[noreturn]] void parse_error(const std::string& message) { throw Error(ErrorCode::Parse, message); }

const json& member(const json& object, const char* key, const std::string& where) {
  if (!object.is_object()) parse_error(where + " is not an object");
  auto it = object.find(key);
  if (it == object.end()) parse_error(where + "." + key + " is missing");
  return *it;
}

Scalar scalar_from(const json& value, const std::string& where) {
  if (value.is_string()) {
    try {
      return parse_scalar(value.get<std::string>());
    } catch (const Error& error) {
      parse_error(where + ": " + error.what());
    }
  }
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Scalar(std::to_string(value.get<std::uint64_t>()))
                                      : Scalar(std::to_string(value.get<std::int64_t>()));
  }
  parse_error(where + ": scalar must be an integer or a \"p/q\" string");
}

std::size_t index_from(const json& value, std::size_t bound, const std::string& where) {
  if (!value.is_number_unsigned()) parse_error(where + ": index must be a nonnegative integer");
  const auto i = value.get<std::uint64_t>();
  if (i >= bound) {
    throw Error(ErrorCode::DimensionMismatch,
                where + ": index " + std::to_string(i) + " out of range " + std::to_string(bound));
  }
  return static_cast<std::size_t>(i);
}

std::vector<std::string> labels_from(const json& value, const std::string& where) {
  if (!value.is_array()) parse_error(where + " must be an array of strings");
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const auto& item : value) {
    if (!item.is_string()) parse_error(where + " must be an array of strings");
    labels.push_back(item.get<std::string>());
    if (!seen.insert(labels.back()).second) parse_error(where + ": label " + labels.back() + " repeated");
  }
  return labels;
}

Tensor3 tensor_from(const json& value, std::array<std::size_t, 3> dims, const std::string& where) {
  if (!value.is_array()) parse_error(where + " must be a list of [i, j, k, value] entries");
  Tensor3 tensor(dims[0], dims[1], dims[2]);
  std::set<std::array<std::size_t, 3>> seen;
  for (const auto& entry : value) {
    if (!entry.is_array() || entry.size() != 4) parse_error(where + ": entries must be [i, j, k, value]");
    std::array<std::size_t, 3> idx{};
    for (std::size_t a = 0; a < 3; ++a) idx[a] = index_from(entry[a], dims[a], where);
    if (!seen.insert(idx).second) parse_error(where + ": duplicate entry");
    tensor(idx[0], idx[1], idx[2]) = scalar_from(entry[3], where);
  }
  return tensor;
}

Vector vector_from(const json& value, std::size_t dim, const std::string& where) {
  if (!value.is_array()) parse_error(where + " must be a list of [i, value] entries");
  Vector vector(dim, Scalar(0));
  std::set<std::size_t> seen;
  for (const auto& entry : value) {
    if (!entry.is_array() || entry.size() != 2) parse_error(where + ": entries must be [i, value]");
    const std::size_t i = index_from(entry[0], dim, where);
    if (!seen.insert(i).second) parse_error(where + ": duplicate entry");
    vector[i] = scalar_from(entry[1], where);
  }
  return vector;
}

json tensor_to(const Tensor3& tensor) {
  json entries = json::array();
  const auto& d = tensor.dims();
  for (std::size_t i = 0; i < d[0]; ++i) {
    for (std::size_t j = 0; j < d[1]; ++j) {
      for (std::size_t k = 0; k < d[2]; ++k) {
        if (!is_zero(tensor(i, j, k))) entries.push_back({i, j, k, format_scalar(tensor(i, j, k))});
      }
    }
  }
  return entries;
}

json vector_to(const Vector& vector) {
  json entries = json::array();
  for (std::size_t i = 0; i < vector.size(); ++i) {
    if (!is_zero(vector[i])) entries.push_back({i, format_scalar(vector[i])});
  }
  return entries;
}

std::optional<Scalar> derived_loop_constant(const AlgebraData& algebra) {
  try {
    return compute_loop_constant(algebra);
  } catch (const Error&) {
    return std::nullopt;
  }
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& error) {
    parse_error(error.what());
  }
}

}  // namespace

SystemData system_from_json(std::string_view text) {
  const json doc = parse_document(text);
  SystemData sys;

  const json& a = member(doc, "algebra", "system");
  sys.algebra.basis = labels_from(member(a, "basis_labels", "algebra"), "algebra.basis_labels");
  const std::size_t na = sys.algebra.dim();
  sys.algebra.mult = tensor_from(member(a, "mult", "algebra"), {na, na, na}, "algebra.mult");
  sys.algebra.comult = tensor_from(member(a, "comult", "algebra"), {na, na, na}, "algebra.comult");
  sys.algebra.unit = vector_from(member(a, "unit", "algebra"), na, "algebra.unit");
  sys.algebra.counit = vector_from(member(a, "counit", "algebra"), na, "algebra.counit");
  if (a.contains("loop_constant")) {
    sys.algebra.loop_constant = scalar_from(a["loop_constant"], "algebra.loop_constant");
  } else {
    sys.algebra.loop_constant = derived_loop_constant(sys.algebra);
  }

  const json& b = member(doc, "module", "system");
  sys.module.basis = labels_from(member(b, "basis_labels", "module"), "module.basis_labels");
  const std::size_t nb = sys.module.dim();
  sys.module.act = tensor_from(member(b, "act", "module"), {nb, na, nb}, "module.act");
  sys.module.coact = tensor_from(member(b, "coact", "module"), {nb, nb, na}, "module.coact");

  const json& c = member(doc, "defect", "system");
  sys.defect.basis = labels_from(member(c, "basis_labels", "defect"), "defect.basis_labels");
  const std::size_t nc = sys.defect.dim();
  sys.defect.act = tensor_from(member(c, "act", "defect"), {nc, nb, nb}, "defect.act");
  sys.defect.coact = tensor_from(member(c, "coact", "defect"), {nb, nc, nb}, "defect.coact");
  const char* algebra_keys[] = {"c_mult", "c_comult", "c_unit", "c_counit"};
  int present = 0;
  for (const char* key : algebra_keys) present += c.contains(key);
  if (present != 0 && present != 4) {
    parse_error("defect: c_mult, c_comult, c_unit and c_counit must be given together");
  }
  if (present == 4) {
    AlgebraData alg;
    alg.basis = sys.defect.basis;
    alg.mult = tensor_from(c["c_mult"], {nc, nc, nc}, "defect.c_mult");
    alg.comult = tensor_from(c["c_comult"], {nc, nc, nc}, "defect.c_comult");
    alg.unit = vector_from(c["c_unit"], nc, "defect.c_unit");
    alg.counit = vector_from(c["c_counit"], nc, "defect.c_counit");
    alg.loop_constant = derived_loop_constant(alg);
    sys.defect.algebra = std::move(alg);
  }
  if (c.contains("loop_constant")) {
    sys.defect.loop_constant = scalar_from(c["loop_constant"], "defect.loop_constant");
  }
  check_dimensions(sys);
  return sys;
}

std::string system_to_json(const SystemData& system) {
  check_dimensions(system);
  json doc;
  json& a = doc["algebra"];
  a["basis_labels"] = system.algebra.basis;
  a["mult"] = tensor_to(system.algebra.mult);
  a["comult"] = tensor_to(system.algebra.comult);
  a["unit"] = vector_to(system.algebra.unit);
  a["counit"] = vector_to(system.algebra.counit);
  if (system.algebra.loop_constant) a["loop_constant"] = format_scalar(*system.algebra.loop_constant);
  json& b = doc["module"];
  b["basis_labels"] = system.module.basis;
  b["act"] = tensor_to(system.module.act);
  b["coact"] = tensor_to(system.module.coact);
  json& c = doc["defect"];
  c["basis_labels"] = system.defect.basis;
  c["act"] = tensor_to(system.defect.act);
  c["coact"] = tensor_to(system.defect.coact);
  if (system.defect.algebra) {
    c["c_mult"] = tensor_to(system.defect.algebra->mult);
    c["c_comult"] = tensor_to(system.defect.algebra->comult);
    c["c_unit"] = vector_to(system.defect.algebra->unit);
    c["c_counit"] = vector_to(system.defect.algebra->counit);
  }
  if (system.defect.loop_constant) c["loop_constant"] = format_scalar(*system.defect.loop_constant);
  return detail::pretty_json(doc);
}

CurveSurfaceComplex complex_from_json(std::string_view text) {
  const json doc = parse_document(text);
  CurveSurfaceComplex c;
  auto int_from = [](const json& v, const std::string& where) {
    if (!v.is_number_integer()) parse_error(where + ": expected an integer");
    return v.get<int>();
  };
  const json& vertices = member(doc, "vertices", "complex");
  if (!vertices.is_array()) parse_error("complex.vertices must be an array");
  for (const auto& v : vertices) {
    const json& on = member(v, "on_curve", "vertex");
    if (!on.is_boolean()) parse_error("vertex.on_curve must be a boolean");
    c.vertices.push_back({int_from(member(v, "id", "vertex"), "vertex.id"), on.get<bool>()});
  }
  const json& triangles = member(doc, "triangles", "complex");
  if (!triangles.is_array()) parse_error("complex.triangles must be an array");
  for (const auto& t : triangles) {
    if (!t.is_array() || t.size() != 3) parse_error("triangles must be vertex triples");
    c.triangles.push_back(canonical_rotation(
        {int_from(t[0], "triangle"), int_from(t[1], "triangle"), int_from(t[2], "triangle")}));
  }
  if (doc.contains("off_curve_order")) {
    if (!doc["off_curve_order"].is_array()) parse_error("complex.off_curve_order must be an array");
    for (const auto& v : doc["off_curve_order"]) c.off_curve_order.push_back(int_from(v, "off_curve_order"));
  } else {
    for (const auto& v : c.vertices) {
      if (!v.on_curve) c.off_curve_order.push_back(v.id);
    }
  }
  if (doc.contains("curve_cycles")) {
    if (!doc["curve_cycles"].is_array()) parse_error("complex.curve_cycles must be an array");
    for (const auto& cycle : doc["curve_cycles"]) {
      if (!cycle.is_array()) parse_error("curve cycles must be vertex lists");
      std::vector<int> ids;
      for (const auto& v : cycle) ids.push_back(int_from(v, "curve_cycles"));
      c.curve_cycles.push_back(std::move(ids));
    }
  }
  return c;
}

std::string complex_to_json(const CurveSurfaceComplex& complex) {
  json doc;
  doc["vertices"] = json::array();
  for (const auto& v : complex.vertices) doc["vertices"].push_back({{"id", v.id}, {"on_curve", v.on_curve}});
  doc["off_curve_order"] = complex.off_curve_order;
  doc["triangles"] = json::array();
  for (const auto& t : complex.triangles) doc["triangles"].push_back(t);
  doc["curve_cycles"] = json::array();
  for (const auto& cycle : complex.curve_cycles) doc["curve_cycles"].push_back(cycle);
  return detail::pretty_json(doc);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::InvalidArgument, "write failed for " + path);
}

}  // namespace tqftdef
