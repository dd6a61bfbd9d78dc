#pragma once

#include "quartet/exact.hpp"
#include "quartet/family.hpp"

#include <optional>
#include <string>

#include "json.hpp"

namespace quartet {

// One row of tabulated output. Every numeric field is a decimal string —
// the values routinely outgrow 64 bits, and JSON numbers or CSV consumers
// would silently round them. Empty solution fields mean "no solution found
// for this h", which is a meaningful row in a coverage table.
struct OutputRecord {
    std::string h;
    std::string a, b, c, d;  // all empty, or all set
    std::string source;      // family tag, "search", or empty
};

bool operator==(const OutputRecord& x, const OutputRecord& y);

OutputRecord to_record(const ExactInt& h, const std::optional<Solution>& sol);

// CSV with the fixed header below. Fields containing commas or quotes
// (family tags like "FT(p=2,q=1)") are quoted per the usual CSV rules.
std::string csv_header();                       // "h,A,B,C,D,source"
std::string to_csv_row(const OutputRecord& r);
std::optional<OutputRecord> parse_csv_row(const std::string& line);

// JSON object with keys h, A, B, C, D, source; absent values are null.
nlohmann::ordered_json to_json(const OutputRecord& r);
std::optional<OutputRecord> record_from_json(const nlohmann::json& j);

// True when the record names a solution and the five parsed values satisfy
// A^4 + h*B^4 == C^4 + h*D^4 exactly. Records without a solution are vacuously
// valid; malformed numbers are not.
bool revalidate(const OutputRecord& r);

// "h=3 A=4 B=1 C=2 D=3 source=F1(p=1)" — the CLI's text form of a solution.
std::string solution_line(const Solution& s);

} // namespace quartet
