#include "quartet/records.hpp"

#include <tuple>

namespace quartet {

namespace {

// RFC-style CSV quoting, needed because two-parameter family tags carry a
// comma ("FT(p=2,q=1)").
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

// Split one CSV line into fields, honoring quotes. nullopt on malformed
// quoting. Embedded newlines never occur in this format.
std::optional<std::vector<std::string>> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            if (!cur.empty())
                return std::nullopt;       // quote opening mid-field
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (quoted)
        return std::nullopt;
    fields.push_back(std::move(cur));
    return fields;
}

} // namespace

bool operator==(const OutputRecord& x, const OutputRecord& y) {
    return std::tie(x.h, x.a, x.b, x.c, x.d, x.source) ==
           std::tie(y.h, y.a, y.b, y.c, y.d, y.source);
}

OutputRecord to_record(const ExactInt& h, const std::optional<Solution>& sol) {
    OutputRecord r;
    r.h = dec(h);
    if (sol) {
        r.a = dec(sol->a);
        r.b = dec(sol->b);
        r.c = dec(sol->c);
        r.d = dec(sol->d);
        r.source = sol->source;
    }
    return r;
}

std::string csv_header() {
    return "h,A,B,C,D,source";
}

std::string to_csv_row(const OutputRecord& r) {
    return csv_field(r.h) + "," + csv_field(r.a) + "," + csv_field(r.b) + "," +
           csv_field(r.c) + "," + csv_field(r.d) + "," + csv_field(r.source);
}

std::optional<OutputRecord> parse_csv_row(const std::string& line) {
    auto fields = split_csv(line);
    if (!fields || fields->size() != 6)
        return std::nullopt;
    return OutputRecord{(*fields)[0], (*fields)[1], (*fields)[2],
                        (*fields)[3], (*fields)[4], (*fields)[5]};
}

nlohmann::ordered_json to_json(const OutputRecord& r) {
    nlohmann::ordered_json j;
    auto put = [&j](const char* key, const std::string& v) {
        if (v.empty())
            j[key] = nullptr;
        else
            j[key] = v;
    };
    j["h"] = r.h;
    put("A", r.a);
    put("B", r.b);
    put("C", r.c);
    put("D", r.d);
    put("source", r.source);
    return j;
}

std::optional<OutputRecord> record_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("h") || !j["h"].is_string())
        return std::nullopt;
    OutputRecord r;
    r.h = j["h"].get<std::string>();
    auto get = [&j](const char* key) -> std::optional<std::string> {
        if (!j.contains(key) || j[key].is_null())
            return std::string();
        if (!j[key].is_string())
            return std::nullopt;
        return j[key].get<std::string>();
    };
    auto a = get("A"), b = get("B"), c = get("C"), d = get("D"), src = get("source");
    if (!a || !b || !c || !d || !src)
        return std::nullopt;
    r.a = *a;
    r.b = *b;
    r.c = *c;
    r.d = *d;
    r.source = *src;
    return r;
}

bool revalidate(const OutputRecord& r) {
    auto h = parse_decimal(r.h);
    if (!h)
        return false;
    if (r.a.empty() && r.b.empty() && r.c.empty() && r.d.empty())
        return true;                       // a "no solution" row
    auto a = parse_decimal(r.a), b = parse_decimal(r.b);
    auto c = parse_decimal(r.c), d = parse_decimal(r.d);
    if (!a || !b || !c || !d)
        return false;
    return equation_holds(*h, *a, *b, *c, *d);
}

std::string solution_line(const Solution& s) {
    return "h=" + dec(s.h) + " A=" + dec(s.a) + " B=" + dec(s.b) + " C=" +
           dec(s.c) + " D=" + dec(s.d) + " source=" + s.source;
}

} // namespace quartet
