#include "fitbound/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fitbound {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string drop_comment(const std::string& s) {
    std::size_t pos = s.find('#');
    return pos == std::string::npos ? s : s.substr(0, pos);
}

std::vector<std::vector<int>> parse_cycles(const std::string& text) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != '(')
            throw std::invalid_argument("permutation: expected '(' in cycle notation");
        std::size_t close = text.find(')', i);
        if (close == std::string::npos)
            throw std::invalid_argument("permutation: unbalanced cycle");
        std::istringstream body(text.substr(i + 1, close - i - 1));
        std::vector<int> cyc;
        std::string tok;
        while (body >> tok) {
            // allow comma separators inside cycles
            tok.erase(std::remove(tok.begin(), tok.end(), ','), tok.end());
            if (tok.empty()) continue;
            cyc.push_back(std::stoi(tok));
        }
        for (int v : cyc)
            if (v < 1) throw std::invalid_argument("permutation: points are 1-based");
        cycles.push_back(std::move(cyc));
        i = close + 1;
    }
    return cycles;
}

}  // namespace

int permutation_text_degree(const std::string& raw) {
    std::string text = strip(raw);
    if (text.empty()) return 0;
    if (text[0] == '(') {
        int mx = 0;
        for (const auto& cyc : parse_cycles(text))
            for (int v : cyc) mx = std::max(mx, v);
        return mx;
    }
    std::istringstream in(text);
    int count = 0;
    std::string tok;
    while (in >> tok) ++count;
    return count;
}

Permutation parse_permutation(const std::string& raw, int degree) {
    std::string text = strip(raw);
    Permutation p = Permutation::identity(degree);
    if (text.empty()) return p;
    if (text[0] == '(') {
        for (const auto& cyc : parse_cycles(text)) {
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                int from = cyc[i] - 1;
                int to = cyc[(i + 1) % cyc.size()] - 1;
                if (from >= degree || to >= degree)
                    throw std::invalid_argument("permutation: point exceeds degree");
                p.images[static_cast<std::size_t>(from)] =
                    static_cast<std::uint16_t>(to);
            }
        }
        // reject texts like "(1 2)(2 3)" that are not injective
        std::vector<bool> seen(static_cast<std::size_t>(degree), false);
        for (auto v : p.images) {
            if (seen[v]) throw std::invalid_argument("permutation: repeated image");
            seen[v] = true;
        }
        return p;
    }
    std::istringstream in(text);
    std::vector<int> imgs;
    int v;
    while (in >> v) imgs.push_back(v);
    if (static_cast<int>(imgs.size()) > degree)
        throw std::invalid_argument("permutation: image list longer than degree");
    std::vector<bool> seen(static_cast<std::size_t>(degree), false);
    for (std::size_t i = 0; i < imgs.size(); ++i) {
        if (imgs[i] < 1 || imgs[i] > static_cast<int>(imgs.size()))
            throw std::invalid_argument(
                "permutation: image list must permute 1..n within its own length");
        p.images[i] = static_cast<std::uint16_t>(imgs[i] - 1);
    }
    for (auto x : p.images) {
        if (seen[x]) throw std::invalid_argument("permutation: repeated image");
        seen[x] = true;
    }
    return p;
}

Group load_group_file(const std::string& path, std::int64_t element_cap,
                      std::int64_t cayley_cap) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open group file '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = strip(drop_comment(line));
        if (!t.empty()) lines.push_back(t);
    }
    if (lines.empty()) throw std::invalid_argument("group file '" + path + "' is empty");

    // a single integer on the first line means a cayley table
    {
        std::istringstream head(lines[0]);
        std::int64_t n;
        std::string rest;
        if ((head >> n) && !(head >> rest) && lines[0].find('(') == std::string::npos) {
            if (static_cast<std::int64_t>(lines.size()) != n + 1)
                throw std::invalid_argument("cayley file: expected " + std::to_string(n) +
                                            " rows after the header");
            std::vector<std::vector<std::int32_t>> table;
            for (std::int64_t r = 0; r < n; ++r) {
                std::istringstream row(lines[static_cast<std::size_t>(r + 1)]);
                std::vector<std::int32_t> vals;
                std::int64_t v;
                while (row >> v) vals.push_back(static_cast<std::int32_t>(v - 1));
                if (static_cast<std::int64_t>(vals.size()) != n)
                    throw std::invalid_argument("cayley file: row " + std::to_string(r + 1) +
                                                " has wrong length");
                table.push_back(std::move(vals));
            }
            return from_cayley_table(table, cayley_cap);
        }
    }

    int degree = 1;
    for (const auto& l : lines) degree = std::max(degree, permutation_text_degree(l));
    std::vector<Permutation> gens;
    for (const auto& l : lines) gens.push_back(parse_permutation(l, degree));
    return from_permutations(degree, gens, element_cap);
}

Automorphism load_automorphism_file(const std::string& path, const Group& G) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open automorphism file '" + path + "'");
    if (G.backend() != Group::Backend::permutation)
        throw std::invalid_argument(
            "automorphism file input needs a permutation-backed group");
    std::vector<std::pair<std::int32_t, std::int32_t>> images;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = strip(drop_comment(line));
        if (t.empty()) continue;
        std::size_t arrow = t.find("->");
        if (arrow == std::string::npos) {
            if (t.rfind("frobenius", 0) == 0)
                throw std::invalid_argument(
                    "automorphism file: 'frobenius k' applies only to groups built by "
                    "the constructions module; use the CLI construction commands");
            throw std::invalid_argument("automorphism file: expected 'lhs -> rhs'");
        }
        Permutation lhs = parse_permutation(t.substr(0, arrow), G.degree());
        Permutation rhs = parse_permutation(t.substr(arrow + 2), G.degree());
        auto li = G.index_of(lhs);
        auto ri = G.index_of(rhs);
        if (!li)
            throw std::invalid_argument("automorphism file: '" + strip(t.substr(0, arrow)) +
                                        "' is not a group element");
        if (!ri)
            throw std::invalid_argument("automorphism file: '" + strip(t.substr(arrow + 2)) +
                                        "' is not a group element");
        images.emplace_back(*li, *ri);
    }
    if (images.empty())
        throw std::invalid_argument("automorphism file '" + path + "' has no mappings");
    return Automorphism::from_generator_images(G, images);
}

std::vector<Int> parse_int_list(const std::string& raw) {
    std::string t = strip(raw);
    if (!t.empty() && t.front() == '[') {
        if (t.back() != ']') throw std::invalid_argument("int list: unbalanced brackets");
        t = t.substr(1, t.size() - 2);
    }
    for (char& c : t)
        if (c == ',') c = ' ';
    std::istringstream in(t);
    std::vector<Int> out;
    std::string tok;
    while (in >> tok) out.emplace_back(tok);
    return out;
}

}  // namespace fitbound
