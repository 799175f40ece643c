#include "cellmap/formats.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace cellmap {

namespace {

bool is_token_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

struct LineView {
    std::string_view text;
    int number = 0;  // 1-based
};

std::vector<LineView> split_lines(std::string_view text) {
    std::vector<LineView> lines;
    int number = 1;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) lines.push_back({text.substr(start), number});
            break;
        }
        lines.push_back({text.substr(start, end - start), number});
        start = end + 1;
        ++number;
    }
    return lines;
}

bool is_blank(std::string_view s) {
    return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

// "key value" lines; returns the key and the value's start column.
std::string_view line_key(std::string_view line, size_t& value_begin) {
    size_t key_begin = line.find_first_not_of(" \t\r");
    if (key_begin == std::string_view::npos) {
        value_begin = line.size();
        return {};
    }
    size_t key_end = key_begin;
    while (key_end < line.size() && is_token_char(line[key_end])) ++key_end;
    value_begin = line.find_first_not_of(" \t\r", key_end);
    if (value_begin == std::string_view::npos) value_begin = line.size();
    return line.substr(key_begin, key_end - key_begin);
}

int parse_int(std::string_view token, int line, int column, const char* what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(std::string("expected an integer for ") + what, line, column);
    return v;
}

}  // namespace

Permutation parse_cycles(std::string_view text, const LabelSet& set, int line, int column) {
    std::vector<std::vector<Label>> cycles;
    size_t i = 0;
    auto col = [&](size_t at) { return column + static_cast<int>(at); };
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_space();
    while (i < text.size()) {
        if (text[i] != '(')
            throw ParseError("expected '(' to open a cycle", line, col(i));
        ++i;
        std::vector<Label> cycle;
        while (true) {
            skip_space();
            size_t tok_begin = i;
            while (i < text.size() && is_token_char(text[i])) ++i;
            if (i == tok_begin)
                throw ParseError("expected a label", line, col(i));
            std::string_view token = text.substr(tok_begin, i - tok_begin);
            auto label = label_from_token(token);
            if (!label)
                throw ParseError("unrecognized label '" + std::string(token) + "'", line,
                                 col(tok_begin));
            if (!set.find(*label))
                throw ParseError("label " + std::string(token) + " is not in the label set",
                                 line, col(tok_begin));
            cycle.push_back(*label);
            skip_space();
            if (i >= text.size())
                throw ParseError("unterminated cycle", line, col(i));
            if (text[i] == ',') {
                ++i;
                continue;
            }
            if (text[i] == ')') {
                ++i;
                break;
            }
            throw ParseError("expected ',' or ')'", line, col(i));
        }
        cycles.push_back(std::move(cycle));
        skip_space();
    }
    try {
        return Permutation::from_cycles(set, cycles);
    } catch (const ValidationError& e) {
        throw ParseError(e.what(), line, column);
    }
}

std::string format_cycles(const Permutation& p) {
    std::string out;
    for (const auto& cycle : p.cycles()) {
        out += '(';
        for (size_t i = 0; i < cycle.size(); ++i) {
            if (i) out += ',';
            out += to_string(cycle[i]);
        }
        out += ')';
    }
    return out;
}

namespace {

// Pairs two labels in-place when both are still fixed (the "implied rainbow"
// convention of the alpha line).
Permutation imply_rainbow_pairs(const Permutation& alpha) {
    const LabelSet& set = alpha.labels();
    std::vector<int> img(static_cast<size_t>(alpha.size()));
    for (int i = 0; i < alpha.size(); ++i) img[static_cast<size_t>(i)] = alpha.image(i);
    auto imply = [&](Label a, Label b) {
        int ia = set.index_of(a), ib = set.index_of(b);
        if (img[static_cast<size_t>(ia)] == ia && img[static_cast<size_t>(ib)] == ib) {
            img[static_cast<size_t>(ia)] = ib;
            img[static_cast<size_t>(ib)] = ia;
        }
    };
    if (set.shape() == LabelSet::Shape::Unicellular) {
        imply(L, R);
    } else if (set.shape() == LabelSet::Shape::Bicellular) {
        imply(L1, R1);
        imply(L2, R2);
    }
    return Permutation::from_images(set, std::move(img));
}

struct RecordLines {
    std::vector<std::pair<LineView, size_t>> entries;  // line + value column
    std::vector<std::string_view> keys;

    std::string_view value(size_t idx) const {
        const auto& [line, value_begin] = entries[idx];
        return line.text.substr(value_begin);
    }
    int line_no(size_t idx) const { return entries[idx].first.number; }
    int value_col(size_t idx) const { return static_cast<int>(entries[idx].second) + 1; }
};

RecordLines collect_record(std::string_view text) {
    RecordLines record;
    bool seen_content = false;
    for (const LineView& line : split_lines(text)) {
        if (is_blank(line.text)) {
            if (seen_content) break;  // a blank line ends the record
            continue;
        }
        seen_content = true;
        size_t value_begin = 0;
        std::string_view key = line_key(line.text, value_begin);
        record.entries.emplace_back(line, value_begin);
        record.keys.push_back(key);
    }
    return record;
}

AnyMap parse_one_map_record(const RecordLines& record) {
    if (record.entries.empty()) throw ParseError("empty map record", 1, 1);
    size_t at = 0;
    auto expect = [&](std::string_view key) -> size_t {
        if (at >= record.keys.size() || record.keys[at] != key) {
            int line = at < record.keys.size() ? record.line_no(at)
                                               : record.line_no(record.keys.size() - 1);
            throw ParseError("expected '" + std::string(key) + "' line", line, 1);
        }
        return at++;
    };

    size_t type_idx = expect("type");
    std::string_view type = record.value(type_idx);
    while (!type.empty() && (type.back() == '\r' || type.back() == ' ')) type.remove_suffix(1);
    const bool bicellular = type == "bicellular";
    if (!bicellular && type != "unicellular")
        throw ParseError("map type must be unicellular or bicellular",
                         record.line_no(type_idx), record.value_col(type_idx));

    size_t edges_idx = expect("edges");
    const int n = parse_int(record.value(edges_idx), record.line_no(edges_idx),
                            record.value_col(edges_idx), "edges");
    if (n < 0)
        throw ParseError("edge count must be non-negative", record.line_no(edges_idx),
                         record.value_col(edges_idx));

    int m = 0;
    if (bicellular) {
        size_t m_idx = expect("m");
        m = parse_int(record.value(m_idx), record.line_no(m_idx), record.value_col(m_idx),
                      "m");
        if (n < 1 || m < 1 || m > 2 * n - 1)
            throw ParseError("split index m out of range 1..2n-1", record.line_no(m_idx),
                             record.value_col(m_idx));
    }

    LabelSet set = bicellular ? LabelSet::bicellular(n, m) : LabelSet::unicellular(n);

    size_t alpha_idx = expect("alpha");
    Permutation alpha = imply_rainbow_pairs(
        parse_cycles(record.value(alpha_idx), set, record.line_no(alpha_idx),
                     record.value_col(alpha_idx)));

    bool have_sigma = at < record.keys.size() && record.keys[at] == "sigma";
    Permutation sigma = Permutation::identity(set);
    size_t sigma_idx = 0;
    if (have_sigma) {
        sigma_idx = at++;
        sigma = parse_cycles(record.value(sigma_idx), set, record.line_no(sigma_idx),
                             record.value_col(sigma_idx));
    } else {
        sigma = compose(alpha, canonical_face(set));
    }
    if (at < record.keys.size())
        throw ParseError("unexpected '" + std::string(record.keys[at]) + "' line",
                         record.line_no(at), 1);

    int report_line = have_sigma ? record.line_no(sigma_idx) : record.line_no(alpha_idx);
    try {
        if (bicellular) return validate_bicellular(alpha, sigma);
        return validate_unicellular(alpha, sigma);
    } catch (const ValidationError& e) {
        throw ParseError(e.what(), report_line, 1);
    }
}

}  // namespace

AnyMap parse_map_record(std::string_view text) {
    return parse_one_map_record(collect_record(text));
}

std::vector<AnyMap> parse_map_records(std::string_view text) {
    std::vector<AnyMap> out;
    std::string chunk;
    int chunk_start = 1;
    auto flush = [&](int line) {
        if (!is_blank(chunk)) {
            // re-parse with local numbering, then rebase error lines
            try {
                out.push_back(parse_map_record(chunk));
            } catch (const ParseError& e) {
                throw ParseError(
                    std::string(e.what(), std::string(e.what()).find(" (line")),
                    e.line + chunk_start - 1, e.column);
            }
        }
        chunk.clear();
        chunk_start = line + 1;
    };
    int line_no = 0;
    for (const LineView& line : split_lines(text)) {
        line_no = line.number;
        if (is_blank(line.text)) {
            flush(line.number);
            continue;
        }
        chunk.append(line.text);
        chunk.push_back('\n');
    }
    flush(line_no);
    return out;
}

std::string write_map_record(const UnicellularMap& u) {
    std::ostringstream out;
    out << "type unicellular\n";
    out << "edges " << u.edges() << '\n';
    out << "alpha " << format_cycles(u.alpha()) << '\n';
    out << "sigma " << format_cycles(u.sigma()) << '\n';
    return out.str();
}

std::string write_map_record(const BicellularMap& b) {
    std::ostringstream out;
    out << "type bicellular\n";
    out << "edges " << b.edges() << '\n';
    out << "m " << b.split() << '\n';
    out << "alpha " << format_cycles(b.beta()) << '\n';
    out << "sigma " << format_cycles(b.tau()) << '\n';
    return out.str();
}

std::string write_map_record(const AnyMap& m) {
    return std::visit([](const auto& x) { return write_map_record(x); }, m);
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view text) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        size_t begin = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > begin) out.push_back(text.substr(begin, i - begin));
    }
    return out;
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
    RecordLines record = collect_record(text);
    if (record.entries.empty()) throw ParseError("empty diagram record", 1, 1);
    size_t at = 0;
    auto expect = [&](std::string_view key) -> size_t {
        if (at >= record.keys.size() || record.keys[at] != key) {
            int line = at < record.keys.size() ? record.line_no(at)
                                               : record.line_no(record.keys.size() - 1);
            throw ParseError("expected '" + std::string(key) + "' line", line, 1);
        }
        return at++;
    };

    size_t n_idx = expect("N");
    const int positions = parse_int(record.value(n_idx), record.line_no(n_idx),
                                    record.value_col(n_idx), "N");
    if (positions < 0)
        throw ParseError("N must be non-negative", record.line_no(n_idx),
                         record.value_col(n_idx));

    size_t bb_idx = expect("backbones");
    auto bb_tokens = split_tokens(record.value(bb_idx));
    if (bb_tokens.empty() || bb_tokens.size() > 2)
        throw ParseError("expected one or two backbone intervals", record.line_no(bb_idx),
                         record.value_col(bb_idx));
    std::vector<std::pair<int, int>> intervals;
    for (auto token : bb_tokens) {
        size_t dots = token.find("..");
        if (dots == std::string_view::npos)
            throw ParseError("backbone interval must look like a..b", record.line_no(bb_idx),
                             record.value_col(bb_idx));
        int a = parse_int(token.substr(0, dots), record.line_no(bb_idx),
                          record.value_col(bb_idx), "backbone start");
        int b = parse_int(token.substr(dots + 2), record.line_no(bb_idx),
                          record.value_col(bb_idx), "backbone end");
        intervals.emplace_back(a, b);
    }
    if (intervals.front().first != 1 || intervals.back().second != positions ||
        (intervals.size() == 2 && intervals[1].first != intervals[0].second + 1))
        throw ParseError("backbones must cover 1..N contiguously", record.line_no(bb_idx),
                         record.value_col(bb_idx));
    if (intervals.size() == 1 && positions == 0 && intervals[0] != std::pair<int, int>{1, 0})
        throw ParseError("an empty diagram is written as backbones 1..0",
                         record.line_no(bb_idx), record.value_col(bb_idx));

    size_t arcs_idx = expect("arcs");
    std::vector<std::pair<int, int>> arcs;
    {
        std::string_view arcs_text = record.value(arcs_idx);
        size_t i = 0;
        int line = record.line_no(arcs_idx);
        auto col = [&](size_t p) { return record.value_col(arcs_idx) + static_cast<int>(p); };
        while (i < arcs_text.size()) {
            while (i < arcs_text.size() &&
                   std::isspace(static_cast<unsigned char>(arcs_text[i])))
                ++i;
            if (i >= arcs_text.size()) break;
            if (arcs_text[i] != '(')
                throw ParseError("expected '(' to open an arc", line, col(i));
            size_t close = arcs_text.find(')', i);
            if (close == std::string_view::npos)
                throw ParseError("unterminated arc", line, col(i));
            std::string_view inner = arcs_text.substr(i + 1, close - i - 1);
            size_t comma = inner.find(',');
            if (comma == std::string_view::npos)
                throw ParseError("arc must look like (i,j)", line, col(i));
            int a = parse_int(inner.substr(0, comma), line, col(i + 1), "arc endpoint");
            int b = parse_int(inner.substr(comma + 1), line,
                              col(i + 2 + comma), "arc endpoint");
            arcs.emplace_back(a, b);
            i = close + 1;
        }
    }

    if (at < record.keys.size())
        throw ParseError("unexpected '" + std::string(record.keys[at]) + "' line",
                         record.line_no(at), 1);

    try {
        if (intervals.size() == 2)
            return make_interaction(positions, intervals[0].second, std::move(arcs));
        return make_diagram(positions, std::move(arcs));
    } catch (const ValidationError& e) {
        throw ParseError(e.what(), record.line_no(arcs_idx), 1);
    }
}

std::string write_diagram(const Diagram& d) {
    std::ostringstream out;
    out << "N " << d.positions << '\n';
    if (d.backbones == 2)
        out << "backbones 1.." << d.split << ' ' << d.split + 1 << ".." << d.positions
            << '\n';
    else
        out << "backbones 1.." << d.positions << '\n';
    out << "arcs";
    for (auto [i, j] : d.arcs) out << " (" << i << ',' << j << ')';
    out << '\n';
    return out.str();
}

bool looks_like_diagram(std::string_view text) {
    for (const LineView& line : split_lines(text)) {
        if (is_blank(line.text)) continue;
        size_t value_begin = 0;
        return line_key(line.text, value_begin) == "N";
    }
    return false;
}

}  // namespace cellmap
