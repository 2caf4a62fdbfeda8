#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "rigidity/indices.hpp"

namespace rigidity {

enum class ReportFormat { kText, kMachine };

/// Machine format: one "key=value" line per field in fixed order. Index values
/// appear as exact "p/q" plus an informational 6-decimal twin.
void write_report(std::ostream& out, const IndexReport& report, ReportFormat format);

/// Reads a machine-format document back into key/value pairs.
std::map<std::string, std::string> parse_machine_report(std::istream& in);

std::string format_decimal(double value);

}  // namespace rigidity
