#pragma once

#include "starsuper/algebra.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace starsuper {

// --- algebra interchange documents -------------------------------------------------
//
// {"dim": d, "labels": [...], "structure": [[i, j, k, "num/den"], ...],
//  "grading": [0/1, ...], "involution": [[row, col, "num/den"], ...],
//  "wedderburn": {"blocks": [{"indices", "family", "params"}], "radical": [...]}}
// Indices are 0-based; "wedderburn" is optional.

std::string serialize_algebra(const StarSuperAlgebra& a);

/// Throws ParseError on malformed documents or inconsistent shapes. Does not
/// run validate().
StarSuperAlgebra parse_algebra(const std::string& document);

StarSuperAlgebra read_algebra_file(const std::string& path);
void write_algebra_file(const StarSuperAlgebra& a, const std::string& path);

// --- CSV reports -------------------------------------------------------------------

struct ReportRow {
  std::string check;
  std::string subject;
  std::string kind;
  std::string n;
  std::string expected;
  std::string actual;
  std::string status;  // "pass", "fail" or "info"
};

inline constexpr const char* kCsvHeader = "check,subject,kind,n,expected,actual,status";

void write_csv(std::ostream& os, const std::vector<ReportRow>& rows);
std::string to_csv(const std::vector<ReportRow>& rows);

/// Fixed notation with six digits after the point.
std::string format_decimal(double x);

/// "pass" when expected == actual, else "fail".
ReportRow compare_row(std::string check, std::string subject, std::string kind, std::string n,
                      const std::string& expected, const std::string& actual);

}  // namespace starsuper
