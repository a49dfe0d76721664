// Command-line front end.
//
// Exit codes: 0 success (or colorable), 1 non-colorable (solve only),
// 2 usage, validation, or refusal errors.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "choosability/bounds.hpp"
#include "choosability/construction.hpp"
#include "choosability/error.hpp"
#include "choosability/io.hpp"
#include "choosability/oracle.hpp"
#include "choosability/solver.hpp"

namespace cz = choosability;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotColorable = 1;
constexpr int kExitError = 2;

constexpr std::uint64_t kMaxConstructQ = 256;
constexpr std::uint64_t kMaxBoundsRows = 1'000'000;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Write to a sibling temp file and rename, so a failed run leaves no partial output.
void write_output(const std::optional<std::string>& path, const std::string& content) {
  if (!path) {
    std::cout << content << std::flush;
    return;
  }
  const std::filesystem::path target(*path);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw UsageError("failed writing '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, target);
}

std::uint32_t search_cap_from_env() {
  const char* raw = std::getenv("CHOOSABILITY_SEARCH_CAP");
  if (raw == nullptr || *raw == '\0') return cz::kDefaultSearchCap;
  try {
    std::size_t used = 0;
    const unsigned long value = std::stoul(raw, &used);
    if (used != std::string(raw).size() || value == 0 || value > 64) throw std::invalid_argument("range");
    return static_cast<std::uint32_t>(value);
  } catch (const std::exception&) {
    throw UsageError("CHOOSABILITY_SEARCH_CAP must be an integer in [1, 64]");
  }
}

std::uint32_t narrow(std::uint64_t v, const char* name) {
  if (v > std::numeric_limits<std::uint32_t>::max()) throw UsageError(std::string(name) + " is too large");
  return static_cast<std::uint32_t>(v);
}

std::string describe(const cz::ValidityReport& r, std::uint32_t k, std::uint32_t c) {
  using Issue = cz::ValidityReport::Issue;
  switch (r.issue) {
    case Issue::None: return "valid (" + std::to_string(k) + "," + std::to_string(c) + ")-list assignment";
    case Issue::ListSize:
      return "invalid: vertex " + std::to_string(*r.vertex) + " has " + std::to_string(r.observed) +
             " colors, expected k = " + std::to_string(k);
    case Issue::ColorOutOfRange:
      return "invalid: vertex " + std::to_string(*r.vertex) + " lists color " + std::to_string(r.observed) +
             " outside the universe";
    case Issue::UnsortedList: return "invalid: list of vertex " + std::to_string(*r.vertex) + " is not strictly increasing";
    case Issue::Overlap:
      return "invalid: vertices " + std::to_string(*r.vertex) + " and " + std::to_string(*r.other_vertex) +
             " share " + std::to_string(r.observed) + " colors, more than c = " + std::to_string(c);
  }
  return "invalid";
}

struct Range {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--range must look like N1..N2");
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    Range r{std::stoull(a, &used_a), std::stoull(b, &used_b)};
    if (used_a != a.size() || used_b != b.size() || a.empty() || b.empty()) throw std::invalid_argument("range");
    if (r.first < 1 || r.first > r.last) throw UsageError("--range needs 1 <= N1 <= N2");
    if (r.last - r.first + 1 > kMaxBoundsRows) throw UsageError("--range spans too many rows");
    return r;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("--range must look like N1..N2 with positive integers");
  }
}

int cmd_construct(std::uint64_t q, std::uint64_t c, const std::optional<std::string>& out, const std::string& format) {
  if (q > kMaxConstructQ) throw UsageError("construct supports q <= " + std::to_string(kMaxConstructQ));
  cz::require_admissible(q, c);
  const auto c32 = narrow(c, "c");
  const auto instance = cz::hard_instance(q, c32);
  if (format == "text") {
    write_output(out, cz::io::write_instance_text(instance));
  } else {
    write_output(out, cz::io::write_instance_json(instance, cz::io::construction_meta_json(cz::FiniteField(q), c32)));
  }
  if (out) std::cerr << "wrote n=" << instance.n() << " k=" << instance.k << " num_colors=" << instance.num_colors << '\n';
  return kExitOk;
}

int cmd_solve(const std::string& instance_path, const std::optional<std::string>& out) {
  const auto inst = cz::io::parse_instance_json(read_file(instance_path));
  const auto result = cz::colorable(inst.assignment);
  write_output(out, cz::io::write_certificate_json(result));
  if (result.colorable()) {
    std::cerr << "colorable\n";
    return kExitOk;
  }
  std::cerr << "not colorable: |S| = " << result.violator().vertices.size()
            << ", |N(S)| = " << result.violator().neighborhood.size() << '\n';
  return kExitNotColorable;
}

int cmd_bounds(std::optional<std::uint64_t> n, const std::optional<std::string>& range, std::uint64_t c, bool as_json) {
  if (n.has_value() == range.has_value()) throw UsageError("bounds needs exactly one of --n or --range");
  if (c < 1) throw UsageError("--c must be >= 1");
  Range r = range ? parse_range(*range) : Range{*n, *n};
  if (r.first < 1) throw UsageError("--n must be >= 1");
  std::vector<cz::BoundsReport> rows;
  rows.reserve(r.last - r.first + 1);
  for (std::uint64_t v = r.first; v <= r.last; ++v) rows.push_back(cz::bounds_report(v, c));
  std::cout << (as_json ? cz::io::bounds_json(rows) : cz::io::bounds_text(rows));
  return kExitOk;
}

int cmd_exact(std::uint64_t n, std::uint64_t c, bool as_json) {
  if (n < 1) throw UsageError("--n must be >= 1");
  const auto result = cz::exact_chi_l_complete(narrow(n, "n"), narrow(c, "c"), search_cap_from_env());
  if (as_json) {
    std::cout << cz::io::exact_json(result);
  } else {
    std::cout << result.chi_l << '\n';
    std::cerr << "chi_l(K_" << n << ", " << c << ") = " << result.chi_l << " (" << result.assignments_checked
              << " canonical assignments checked)\n";
  }
  return kExitOk;
}

int cmd_probe(std::uint64_t n_max, std::uint64_t c, std::uint64_t k_cap, bool as_json) {
  if (n_max < 1) throw UsageError("--nmax must be >= 1");
  const auto report = cz::conjecture_probe(narrow(n_max, "nmax"), narrow(c, "c"), narrow(k_cap, "kcap"),
                                           search_cap_from_env());
  if (as_json) {
    std::cout << cz::io::probe_json(report);
    return kExitOk;
  }
  for (const auto& level : report.levels) {
    std::cout << "n=" << level.n << " chi_l(K_n," << c << ")=" << level.chi_complete
              << " graphs=" << level.graphs_checked << " assignments=" << level.assignments_checked << '\n';
  }
  if (report.counterexample) {
    const auto& ce = *report.counterexample;
    std::cout << "counterexample on " << ce.graph.n() << " vertices, edges:";
    for (const auto& [u, v] : ce.graph.edges()) std::cout << ' ' << u << '-' << v;
    std::cout << "\nassignment: " << cz::io::write_instance_json(ce.assignment);
  } else {
    std::cout << "no counterexample\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& instance_path, const std::optional<std::string>& certificate_path) {
  const auto inst = cz::io::parse_instance_json(read_file(instance_path));
  const auto& l = inst.assignment;
  const auto report = cz::validate_assignment(l, l.k, l.c);
  std::cout << describe(report, l.k, l.c) << '\n';
  bool ok = report.valid();
  if (certificate_path) {
    const auto cert = cz::io::parse_certificate_json(read_file(*certificate_path));
    bool consistent = false;
    if (cert.colorable()) {
      consistent = cz::verify_coloring(l, cert.coloring());
      std::cout << (consistent ? "certificate: proper coloring\n" : "certificate: coloring is NOT proper\n");
    } else {
      consistent = cz::verify_violator(l, cert.violator());
      std::cout << (consistent ? "certificate: Hall violator |S| = " + std::to_string(cert.violator().vertices.size()) +
                                     ", |N(S)| = " + std::to_string(cert.violator().neighborhood.size()) + "\n"
                               : std::string("certificate: violator does NOT check out\n"));
    }
    ok = ok && consistent;
  }
  return ok ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"List coloring of complete graphs with separated lists"};
  app.require_subcommand(1);

  std::uint64_t q = 0;
  std::uint64_t c = 0;
  std::optional<std::string> out;
  std::string format = "json";
  auto* construct = app.add_subcommand("construct", "Write the non-colorable (q,c)-list instance on K_n");
  construct->add_option("--q", q, "prime power q")->required();
  construct->add_option("--c", c, "separation c, with c | q-1 and c < q-1")->required();
  construct->add_option("--out", out, "output path (stdout when omitted)");
  construct->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::string instance_path;
  auto* solve = app.add_subcommand("solve", "Decide colorability and print a certificate");
  solve->add_option("instance", instance_path, "instance JSON file")->required();
  solve->add_option("--out", out, "certificate path (stdout when omitted)");

  std::optional<std::uint64_t> bounds_n;
  std::optional<std::string> range;
  bool as_json = false;
  auto* bounds = app.add_subcommand("bounds", "Lower/upper/exact bounds on chi_l(K_n, c)");
  bounds->add_option("--n", bounds_n, "number of vertices");
  bounds->add_option("--range", range, "N1..N2");
  bounds->add_option("--c", c, "separation c")->required();
  bounds->add_flag("--json", as_json, "emit JSON");

  std::uint64_t n = 0;
  auto* exact = app.add_subcommand("exact", "Exact chi_l(K_n, c) by exhaustive search");
  exact->add_option("--n", n, "number of vertices")->required();
  exact->add_option("--c", c, "separation c")->required();
  exact->add_flag("--json", as_json, "emit JSON");

  std::uint64_t n_max = 0;
  std::uint64_t k_cap = 8;
  auto* probe = app.add_subcommand("probe", "Check chi_l(G,c) <= chi_l(K_n,c) over all small graphs");
  probe->add_option("--nmax", n_max, "largest vertex count")->required();
  probe->add_option("--c", c, "separation c")->required();
  probe->add_option("--kcap", k_cap, "largest list size to enumerate");
  probe->add_flag("--json", as_json, "emit JSON");

  std::optional<std::string> certificate_path;
  auto* verify = app.add_subcommand("verify", "Check (k,c)-validity and an optional certificate");
  verify->add_option("instance", instance_path, "instance JSON file")->required();
  verify->add_option("--certificate", certificate_path, "certificate JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*construct) return cmd_construct(q, c, out, format);
    if (*solve) return cmd_solve(instance_path, out);
    if (*bounds) return cmd_bounds(bounds_n, range, c, as_json);
    if (*exact) return cmd_exact(n, c, as_json);
    if (*probe) return cmd_probe(n_max, c, k_cap, as_json);
    if (*verify) return cmd_verify(instance_path, certificate_path);
  } catch (const cz::Error& e) {
    std::cerr << "error (" << cz::to_string(e.code()) << "): " << e.what() << '\n';
    return kExitError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
