#include "rigidity/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

namespace rigidity {

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string edge_list_field(const std::vector<Edge>& edges) {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(edges[i].u) + '-' + std::to_string(edges[i].v);
  }
  return out;
}

void write_machine(std::ostream& out, const IndexReport& r) {
  out << "n=" << r.n << '\n'
      << "m=" << r.m << '\n'
      << "rank=" << r.rank << '\n'
      << "k_r=" << r.k_r.str() << '\n'
      << "k_r_decimal=" << format_decimal(r.k_r.to_double()) << '\n'
      << "redundant_count=" << r.redundant_edges.size() << '\n'
      << "k_u=" << r.k_u.str() << '\n'
      << "k_u_decimal=" << format_decimal(r.k_u.to_double()) << '\n'
      << "redundant_edges=" << edge_list_field(r.redundant_edges) << '\n'
      << "rigid=" << yes_no(r.rigid) << '\n'
      << "minimally_rigid=" << yes_no(r.minimally_rigid) << '\n'
      << "redundantly_rigid=" << yes_no(r.redundantly_rigid) << '\n'
      << "three_connected=" << yes_no(r.three_connected) << '\n'
      << "globally_rigid=" << yes_no(r.globally_rigid) << '\n';
  if (r.k) {
    out << "k=" << *r.k << '\n';
    if (r.k_u_k) {
      out << "k_u_k=" << r.k_u_k->str() << '\n'
          << "k_u_k_decimal=" << format_decimal(r.k_u_k->to_double()) << '\n';
    } else if (r.k_error) {
      out << "k_u_k_error=" << *r.k_error << '\n';
    }
  }
}

void write_text(std::ostream& out, const IndexReport& r) {
  out << "vertices:             " << r.n << '\n'
      << "edges:                " << r.m << '\n'
      << "matroid rank:         " << r.rank << '\n'
      << "rigidity index K_r:   " << r.k_r.str() << " (" << format_decimal(r.k_r.to_double())
      << ")\n"
      << "redundancy index K_u: " << r.k_u.str() << " (" << format_decimal(r.k_u.to_double())
      << "), " << r.redundant_edges.size() << " of " << r.m << " edges redundant\n";
  if (r.k) {
    std::string label = "K_u^" + std::to_string(*r.k) + ":";
    label.resize(std::max<std::size_t>(label.size() + 1, 22), ' ');
    out << label;
    if (r.k_u_k) {
      out << r.k_u_k->str() << " (" << format_decimal(r.k_u_k->to_double()) << ")\n";
    } else {
      out << "undefined: " << r.k_error.value_or("") << '\n';
    }
  }
  out << "redundant edges:      ";
  if (r.redundant_edges.empty()) out << "(none)";
  for (std::size_t i = 0; i < r.redundant_edges.size(); ++i) {
    out << (i ? " " : "") << '(' << r.redundant_edges[i].u << ',' << r.redundant_edges[i].v
        << ')';
  }
  out << '\n'
      << "rigid:                " << yes_no(r.rigid) << '\n'
      << "minimally rigid:      " << yes_no(r.minimally_rigid) << '\n'
      << "redundantly rigid:    " << yes_no(r.redundantly_rigid) << '\n'
      << "3-connected:          " << yes_no(r.three_connected) << '\n'
      << "globally rigid:       " << yes_no(r.globally_rigid) << '\n';
}

}  // namespace

std::string format_decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

void write_report(std::ostream& out, const IndexReport& report, ReportFormat format) {
  if (format == ReportFormat::kMachine) {
    write_machine(out, report);
  } else {
    write_text(out, report);
  }
}

std::map<std::string, std::string> parse_machine_report(std::istream& in) {
  std::map<std::string, std::string> fields;
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    fields[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return fields;
}

}  // namespace rigidity
