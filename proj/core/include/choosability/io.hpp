#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "choosability/bounds.hpp"
#include "choosability/gf.hpp"
#include "choosability/list_assignment.hpp"
#include "choosability/oracle.hpp"
#include "choosability/solver.hpp"

/// Interchange formats. All writers emit compact JSON with a fixed key order
/// and a trailing newline, so equal inputs give byte-identical output.
namespace choosability::io {

inline constexpr int kFormatVersion = 1;

struct Instance {
  ListAssignment assignment;
  std::string meta_json = "{}";  // compact JSON object
};

/// {q, c, p, m, modulus, construction: "furedi-augmented"}
std::string construction_meta_json(const FiniteField& field, std::uint32_t c);

/// {format_version, n, c, k, num_colors, lists, meta}
std::string write_instance_json(const ListAssignment& l, std::string_view meta_json = "{}");

/// First line "n c k num_colors", then one space-separated list per line.
std::string write_instance_text(const ListAssignment& l);

/// Throws Error(MalformedInput) with a line/field diagnostic on syntax errors,
/// missing or mistyped fields, unsorted lists, colors >= num_colors, or lists
/// whose size differs from k.
Instance parse_instance_json(std::string_view text);

/// {colorable: true, coloring} or {colorable: false, violator_S, neighborhood}
std::string write_certificate_json(const ColorabilityResult& r);

/// Throws Error(MalformedInput) when the document does not match either shape.
ColorabilityResult parse_certificate_json(std::string_view text);

std::string bounds_json(std::span<const BoundsReport> rows);
/// Aligned columns with a header row.
std::string bounds_text(std::span<const BoundsReport> rows);

/// {n, c, chi_l, defeated_by, assignments_checked}; defeated_by is an
/// instance object or null.
std::string exact_json(const ExactResult& r);
std::string probe_json(const ProbeReport& r);

}  // namespace choosability::io
