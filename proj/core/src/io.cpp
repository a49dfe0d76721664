#include "choosability/io.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "choosability/error.hpp"

namespace choosability::io {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::MalformedInput, what); }

json instance_object(const ListAssignment& l, json meta) {
  json out;
  out["format_version"] = kFormatVersion;
  out["n"] = l.n();
  out["c"] = l.c;
  out["k"] = l.k;
  out["num_colors"] = l.num_colors;
  json lists = json::array();
  for (const auto& list : l.lists) lists.push_back(list);
  out["lists"] = std::move(lists);
  out["meta"] = std::move(meta);
  return out;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Locate the failing byte as line:column.
    const std::size_t byte = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    malformed("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
}

std::uint32_t get_u32(const json& obj, const std::string& field) {
  const auto it = obj.find(field);
  if (it == obj.end()) malformed("missing field '" + field + "'");
  if (!it->is_number_unsigned() || it->get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max()) {
    malformed("field '" + field + "' must be a non-negative 32-bit integer");
  }
  return it->get<std::uint32_t>();
}

std::vector<std::uint32_t> get_u32_array(const json& value, const std::string& field) {
  if (!value.is_array()) malformed("field '" + field + "' must be an array");
  std::vector<std::uint32_t> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    const auto& item = value[i];
    if (!item.is_number_unsigned() || item.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max()) {
      malformed("field '" + field + "[" + std::to_string(i) + "]' must be a non-negative 32-bit integer");
    }
    out.push_back(item.get<std::uint32_t>());
  }
  return out;
}

json optional_u64(const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

std::string construction_meta_json(const FiniteField& field, std::uint32_t c) {
  json meta;
  meta["q"] = field.size();
  meta["c"] = c;
  meta["p"] = field.characteristic();
  meta["m"] = field.degree();
  meta["modulus"] = std::vector<std::uint32_t>(field.modulus().begin(), field.modulus().end());
  meta["construction"] = "furedi-augmented";
  return meta.dump();
}

std::string write_instance_json(const ListAssignment& l, std::string_view meta_json) {
  json meta = json::parse(meta_json.begin(), meta_json.end());
  return instance_object(l, std::move(meta)).dump() + "\n";
}

std::string write_instance_text(const ListAssignment& l) {
  std::ostringstream out;
  out << l.n() << ' ' << l.c << ' ' << l.k << ' ' << l.num_colors << '\n';
  for (const auto& list : l.lists) {
    for (std::size_t i = 0; i < list.size(); ++i) out << (i ? " " : "") << list[i];
    out << '\n';
  }
  return out.str();
}

Instance parse_instance_json(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) malformed("instance must be a JSON object");
  const auto version = get_u32(doc, "format_version");
  if (version != static_cast<std::uint32_t>(kFormatVersion)) {
    malformed("field 'format_version': unsupported version " + std::to_string(version));
  }
  Instance inst;
  auto& l = inst.assignment;
  const auto n = get_u32(doc, "n");
  l.c = get_u32(doc, "c");
  l.k = get_u32(doc, "k");
  l.num_colors = get_u32(doc, "num_colors");
  const auto lists = doc.find("lists");
  if (lists == doc.end()) malformed("missing field 'lists'");
  if (!lists->is_array()) malformed("field 'lists' must be an array");
  if (lists->size() != n) {
    malformed("field 'lists' has " + std::to_string(lists->size()) + " entries but n = " + std::to_string(n));
  }
  l.lists.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::string field = "lists[" + std::to_string(v) + "]";
    auto list = get_u32_array((*lists)[v], field);
    if (list.size() != l.k) {
      malformed("field '" + field + "' has " + std::to_string(list.size()) + " colors but k = " + std::to_string(l.k));
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i] >= l.num_colors) {
        malformed("field '" + field + "' contains color " + std::to_string(list[i]) + " >= num_colors");
      }
      if (i > 0 && list[i] <= list[i - 1]) malformed("field '" + field + "' is not strictly increasing");
    }
    l.lists.push_back(std::move(list));
  }
  if (const auto meta = doc.find("meta"); meta != doc.end()) {
    if (!meta->is_object()) malformed("field 'meta' must be an object");
    inst.meta_json = meta->dump();
  }
  return inst;
}

std::string write_certificate_json(const ColorabilityResult& r) {
  json out;
  out["colorable"] = r.colorable();
  if (r.colorable()) {
    out["coloring"] = r.coloring();
  } else {
    out["violator_S"] = r.violator().vertices;
    out["neighborhood"] = r.violator().neighborhood;
  }
  return out.dump() + "\n";
}

ColorabilityResult parse_certificate_json(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) malformed("certificate must be a JSON object");
  const auto flag = doc.find("colorable");
  if (flag == doc.end() || !flag->is_boolean()) malformed("field 'colorable' must be a boolean");
  if (flag->get<bool>()) {
    const auto coloring = doc.find("coloring");
    if (coloring == doc.end()) malformed("missing field 'coloring'");
    return ColorabilityResult(get_u32_array(*coloring, "coloring"));
  }
  const auto s = doc.find("violator_S");
  const auto nb = doc.find("neighborhood");
  if (s == doc.end()) malformed("missing field 'violator_S'");
  if (nb == doc.end()) malformed("missing field 'neighborhood'");
  return ColorabilityResult(HallViolator{get_u32_array(*s, "violator_S"), get_u32_array(*nb, "neighborhood")});
}

std::string bounds_json(std::span<const BoundsReport> rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json row;
    row["n"] = r.n;
    row["c"] = r.c;
    row["lower"] = r.lower;
    row["lower_source"] = std::string(to_string(r.lower_source));
    row["lower_q"] = optional_u64(r.lower_q);
    row["upper"] = r.upper;
    row["upper_source"] = std::string(to_string(r.upper_source));
    row["hall_q"] = r.hall_q;
    row["exact"] = optional_u64(r.exact);
    row["asymptotic"] = optional_u64(r.asymptotic);
    row["asymptotic_applicable"] = r.asymptotic_applicable;
    row["ktv_lower"] = r.ktv_lower;
    row["ktv_upper"] = r.ktv_upper;
    out.push_back(std::move(row));
  }
  return out.dump() + "\n";
}

std::string bounds_text(std::span<const BoundsReport> rows) {
  std::ostringstream out;
  out << std::setw(10) << "n" << std::setw(5) << "c" << std::setw(8) << "lower" << "  " << std::left
      << std::setw(13) << "source" << std::right << std::setw(8) << "upper" << "  " << std::left << std::setw(15)
      << "source" << std::right << std::setw(7) << "exact" << std::setw(12) << "ktv_lower" << std::setw(12)
      << "ktv_upper" << '\n';
  out << std::fixed << std::setprecision(4);
  for (const auto& r : rows) {
    out << std::setw(10) << r.n << std::setw(5) << r.c << std::setw(8) << r.lower << "  " << std::left
        << std::setw(13) << to_string(r.lower_source) << std::right << std::setw(8) << r.upper << "  " << std::left
        << std::setw(15) << to_string(r.upper_source) << std::right << std::setw(7)
        << (r.exact ? std::to_string(*r.exact) : std::string("-")) << std::setw(12) << r.ktv_lower << std::setw(12)
        << r.ktv_upper << '\n';
  }
  return out.str();
}

std::string exact_json(const ExactResult& r) {
  json out;
  out["n"] = r.n;
  out["c"] = r.c;
  out["chi_l"] = r.chi_l;
  out["defeated_by"] = r.defeated_by ? instance_object(*r.defeated_by, json::object()) : json(nullptr);
  out["assignments_checked"] = r.assignments_checked;
  return out.dump() + "\n";
}

std::string probe_json(const ProbeReport& r) {
  json out;
  out["n_max"] = r.n_max;
  out["c"] = r.c;
  out["k_cap"] = r.k_cap;
  json levels = json::array();
  for (const auto& level : r.levels) {
    json row;
    row["n"] = level.n;
    row["chi_complete"] = level.chi_complete;
    row["graphs_checked"] = level.graphs_checked;
    row["assignments_checked"] = level.assignments_checked;
    levels.push_back(std::move(row));
  }
  out["levels"] = std::move(levels);
  if (r.counterexample) {
    json ce;
    ce["n"] = r.counterexample->graph.n();
    json edges = json::array();
    for (const auto& [u, v] : r.counterexample->graph.edges()) edges.push_back({u, v});
    ce["edges"] = std::move(edges);
    ce["assignment"] = instance_object(r.counterexample->assignment, json::object());
    out["counterexample"] = std::move(ce);
  } else {
    out["counterexample"] = nullptr;
  }
  return out.dump() + "\n";
}

}  // namespace choosability::io
