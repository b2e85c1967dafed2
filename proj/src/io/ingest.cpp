#include "ptail/io/ingest.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "ptail/error.hpp"

namespace ptail::io {

namespace {

std::vector<std::string> split_fields(const std::string& line, char delim) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == delim) {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    if (delim == ' ' || delim == '\t') {  // collapse runs of whitespace
        std::vector<std::string> packed;
        for (auto& f : out)
            if (!f.empty()) packed.push_back(std::move(f));
        return packed;
    }
    return out;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::vector<double> load_values(std::istream& in, const IngestSpec& spec) {
    std::string line;
    std::size_t col_index = 0;
    bool col_resolved = all_digits(spec.column);
    if (col_resolved) col_index = static_cast<std::size_t>(std::stoull(spec.column));

    std::vector<double> values;
    std::size_t lineno = 0;
    bool header_pending = spec.header;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_fields(line, spec.delimiter);
        if (header_pending) {
            header_pending = false;
            if (!col_resolved) {
                for (std::size_t i = 0; i < fields.size(); ++i) {
                    if (fields[i] == spec.column) {
                        col_index = i;
                        col_resolved = true;
                        break;
                    }
                }
                if (!col_resolved)
                    throw data_error("column '" + spec.column + "' not found in header");
            }
            continue;
        }
        if (!col_resolved)
            throw data_error("column '" + spec.column + "' is a name but --header not set");
        if (col_index >= fields.size())
            throw data_error("line " + std::to_string(lineno) + ": no column " +
                             std::to_string(col_index));
        const std::string& f = fields[col_index];
        char* end = nullptr;
        const double v = std::strtod(f.c_str(), &end);
        if (end == f.c_str() || *end != '\0')
            throw data_error("line " + std::to_string(lineno) + ": not a number: '" + f + "'");
        if (spec.min_threshold && v < *spec.min_threshold) continue;
        values.push_back(spec.rescale ? v / *spec.rescale : v);
    }
    return values;
}

SortedSample load_sample(const IngestSpec& spec) {
    std::vector<double> values;
    if (spec.path == "-") {
        values = load_values(std::cin, spec);
    } else {
        std::ifstream in(spec.path);
        if (!in) throw data_error("cannot open input file: " + spec.path);
        values = load_values(in, spec);
    }
    if (values.size() < 2)
        throw data_error("need at least 2 observations after filtering, got " +
                         std::to_string(values.size()));
    try {
        return SortedSample(std::move(values));
    } catch (const std::invalid_argument& e) {
        throw data_error(std::string("invalid sample: ") + e.what());
    }
}

}  // namespace ptail::io
