#include "elnet/edge_list.hpp"

#include <charconv>
#include <cmath>
#include <iterator>
#include <string>

#include "elnet/error.hpp"

namespace elnet {

namespace {

bool is_blank(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_blank(line[i])) ++i;
        const std::size_t start = i;
        while (i < line.size() && !is_blank(line[i])) ++i;
        if (i > start) {
            fields.push_back(line.substr(start, i - start));
        }
    }
    return fields;
}

double parse_conductance(std::string_view field, std::size_t line_no) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (first != last && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw Error(ErrorKind::ParseError, "cannot read conductance '" + std::string(field) + "'", line_no);
    }
    return value;
}

} // namespace

std::vector<WeightedEdge> parse_edge_list(std::string_view text) {
    std::vector<WeightedEdge> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        const auto fields = split_fields(line);
        if (fields.empty() || fields.front().front() == '#') {
            continue;
        }
        if (fields.size() < 2 || fields.size() > 3) {
            throw Error(ErrorKind::ParseError,
                        "expected 'u v [c]', found " + std::to_string(fields.size()) + " fields",
                        line_no);
        }
        WeightedEdge edge{std::string(fields[0]), std::string(fields[1]), 1.0};
        if (fields.size() == 3) {
            edge.conductance = parse_conductance(fields[2], line_no);
        }
        if (edge.u == edge.v) {
            throw Error(ErrorKind::SelfLoop, "self-loop at vertex '" + edge.u + "'", line_no);
        }
        if (!std::isfinite(edge.conductance) || edge.conductance <= 0.0) {
            throw Error(ErrorKind::NonPositiveConductance,
                        "conductance must be positive and finite, got '" + std::string(fields[2]) + "'",
                        line_no);
        }
        edges.push_back(std::move(edge));
    }
    return edges;
}

Network parse_network_file(std::string_view text) {
    return build_network(parse_edge_list(text));
}

Network read_network(std::istream& in) {
    const std::string text(std::istreambuf_iterator<char>(in), {});
    return parse_network_file(text);
}

} // namespace elnet
