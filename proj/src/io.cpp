#include "ccolor/io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace ccolor {

namespace {

// significant lines with their 1-based numbers, comments and blanks dropped
std::vector<std::pair<int, std::string>> significant_lines(std::istream& in) {
    std::vector<std::pair<int, std::string>> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        out.emplace_back(no, line);
    }
    return out;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw InvalidInput("line " + std::to_string(line_no) + ": " + what);
}

std::vector<long long> parse_ints(int line_no, const std::string& text,
                                  const std::string& skip_word = "") {
    std::istringstream ss(text);
    if (!skip_word.empty()) {
        std::string w;
        ss >> w;
    }
    std::vector<long long> vals;
    long long x;
    while (ss >> x) vals.push_back(x);
    std::string rest;
    if (ss.clear(), ss >> rest) fail(line_no, "unexpected token '" + rest + "'");
    return vals;
}

std::string first_word(const std::string& text) {
    std::istringstream ss(text);
    std::string w;
    ss >> w;
    return w;
}

}  // namespace

Instance parse_instance(std::istream& in) {
    auto lines = significant_lines(in);
    std::size_t at = 0;
    auto next = [&]() -> const std::pair<int, std::string>& {
        if (at >= lines.size())
            throw InvalidInput("unexpected end of instance after line " +
                               std::to_string(lines.empty() ? 0 : lines.back().first));
        return lines[at++];
    };

    const auto& [hg_no, hg_line] = next();
    if (first_word(hg_line) != "hg") fail(hg_no, "expected 'hg <n> <m>' header");
    auto header = parse_ints(hg_no, hg_line, "hg");
    if (header.size() != 2 || header[0] < 0 || header[1] < 0)
        fail(hg_no, "expected 'hg <n> <m>' header");
    int n = static_cast<int>(header[0]);
    int m = static_cast<int>(header[1]);

    std::vector<std::vector<int>> edges;
    for (int i = 0; i < m; ++i) {
        const auto& [no, text] = next();
        auto ids = parse_ints(no, text);
        if (ids.empty()) fail(no, "empty edge");
        std::vector<int> edge;
        for (long long id : ids) {
            if (id < 1 || id > n) fail(no, "vertex id " + std::to_string(id) + " out of 1.." + std::to_string(n));
            edge.push_back(static_cast<int>(id - 1));
        }
        edges.push_back(std::move(edge));
    }

    Instance inst;
    try {
        inst.hg = validate_hypergraph(n, edges);
    } catch (const InvalidInput& e) {
        throw InvalidInput(std::string("invalid hypergraph: ") + e.what());
    }

    while (at < lines.size()) {
        const auto& [no, text] = lines[at];
        std::string word = first_word(text);
        if (word == "host") {
            ++at;
            if (inst.tree) fail(no, "duplicate host section");
            std::vector<Line> tl;
            for (int i = 0; i + 1 < n; ++i) {
                const auto& [lno, ltext] = next();
                auto ids = parse_ints(lno, ltext);
                if (ids.size() != 2) fail(lno, "expected 'u v' host line");
                for (long long id : ids)
                    if (id < 1 || id > n)
                        fail(lno, "vertex id " + std::to_string(id) + " out of 1.." + std::to_string(n));
                tl.emplace_back(static_cast<int>(ids[0] - 1), static_cast<int>(ids[1] - 1));
            }
            try {
                inst.tree = make_host_tree(n, std::move(tl));
            } catch (const InvalidInput& e) {
                fail(no, std::string("invalid host section: ") + e.what());
            }
        } else if (word == "demands") {
            ++at;
            if (inst.demands) fail(no, "duplicate demands section");
            auto ids = parse_ints(no, text, "demands");
            if (static_cast<int>(ids.size()) != m)
                fail(no, "expected " + std::to_string(m) + " demands, got " +
                             std::to_string(ids.size()));
            std::vector<int> w;
            for (long long id : ids) w.push_back(static_cast<int>(id));
            try {
                inst.demands = make_demands(inst.hg, std::move(w));
            } catch (const InvalidInput& e) {
                fail(no, std::string("invalid demands: ") + e.what());
            }
        } else {
            fail(no, "unexpected '" + word + "' (expected 'host' or 'demands')");
        }
    }
    return inst;
}

Instance parse_instance(const std::string& text) {
    std::istringstream ss(text);
    return parse_instance(ss);
}

std::string render_instance(const Instance& inst) {
    std::ostringstream out;
    out << "hg " << inst.hg.n << ' ' << inst.hg.m() << '\n';
    for (const auto& e : inst.hg.edges) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i] + 1;
        out << '\n';
    }
    if (inst.tree) {
        out << "host\n";
        for (const auto& [u, v] : inst.tree->lines) out << u + 1 << ' ' << v + 1 << '\n';
    }
    if (inst.demands) {
        out << "demands";
        for (int w : inst.demands->w) out << ' ' << w;
        out << '\n';
    }
    return out.str();
}

CnfFormula parse_dimacs(std::istream& in) {
    std::string line;
    int no = 0;
    int vars = -1, expected_clauses = -1;
    std::vector<std::array<int, 3>> clauses;
    std::vector<int> current;
    while (std::getline(in, line)) {
        ++no;
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == 'c' || line[pos] == '#') continue;
        if (line[pos] == 'p') {
            std::istringstream ss(line);
            std::string p, cnf;
            if (!(ss >> p >> cnf >> vars >> expected_clauses) || cnf != "cnf" || vars < 0 ||
                expected_clauses < 0)
                fail(no, "malformed 'p cnf <vars> <clauses>' header");
            continue;
        }
        if (vars < 0) fail(no, "clause before 'p cnf' header");
        auto ids = parse_ints(no, line);
        for (long long lit : ids) {
            if (lit == 0) {
                if (current.size() != 3)
                    fail(no, "clause " + std::to_string(clauses.size() + 1) + " has " +
                                 std::to_string(current.size()) + " literals, need 3");
                clauses.push_back({current[0], current[1], current[2]});
                current.clear();
            } else {
                if (std::abs(lit) > vars)
                    fail(no, "literal " + std::to_string(lit) + " out of range");
                current.push_back(static_cast<int>(lit));
            }
        }
    }
    if (vars < 0) throw InvalidInput("missing 'p cnf' header");
    if (!current.empty()) throw InvalidInput("last clause is not terminated by 0");
    if (static_cast<int>(clauses.size()) != expected_clauses)
        throw InvalidInput("header declares " + std::to_string(expected_clauses) +
                           " clauses, file has " + std::to_string(clauses.size()));
    return validate_cnf(vars, clauses);
}

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream ss(text);
    return parse_dimacs(ss);
}

std::vector<WitnessItem> parse_witness(std::istream& in) {
    std::vector<WitnessItem> items;
    for (const auto& [no, text] : significant_lines(in)) {
        std::string word = first_word(text);
        std::optional<WitnessKind> kind;
        bool to_zero_based = false;
        if (word == "coloring") kind = WitnessKind::Coloring;
        else if (word == "transversal") kind = WitnessKind::Transversal, to_zero_based = true;
        else if (word == "multitransversal")
            kind = WitnessKind::Multitransversal, to_zero_based = true;
        else if (word == "independent-set") kind = WitnessKind::IndependentSet, to_zero_based = true;
        else if (word == "lines") kind = WitnessKind::Lines, to_zero_based = true;
        else if (word == "variables") kind = WitnessKind::Variables;
        if (!kind) continue;  // other report lines (algo, value, bound, ...)
        WitnessItem item{*kind, {}};
        for (long long x : parse_ints(no, text, word)) {
            if (to_zero_based && x < 1) fail(no, "ids must be 1-based and positive");
            item.values.push_back(static_cast<int>(x - (to_zero_based ? 1 : 0)));
        }
        if (item.kind == WitnessKind::Lines && item.values.size() % 2 != 0)
            fail(no, "lines need an even number of ids");
        items.push_back(std::move(item));
    }
    return items;
}

std::string format_vertex_set(std::vector<int> s) {
    std::sort(s.begin(), s.end());
    std::ostringstream out;
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i] + 1;
    return out.str();
}

std::string format_coloring(const CColoring& c) {
    std::ostringstream out;
    for (int i = 0; i < c.n(); ++i) out << (i ? " " : "") << c.colors[i];
    return out.str();
}

std::string format_lines(std::vector<Line> lines) {
    std::sort(lines.begin(), lines.end());
    std::ostringstream out;
    for (std::size_t i = 0; i < lines.size(); ++i)
        out << (i ? " " : "") << lines[i].first + 1 << ' ' << lines[i].second + 1;
    return out.str();
}

}  // namespace ccolor
