#include "planar_story/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>

#include <omp.h>

#include "json.hpp"
#include "planar_story/error.hpp"

namespace pstory {

using boost::multiprecision::cpp_int;
using json = nlohmann::json;

rational parse_decimal(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
    std::string digits;
    long exponent = 0;
    bool seen_digit = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        digits += text[i++];
        seen_digit = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            digits += text[i++];
            --exponent;
            seen_digit = true;
        }
    }
    if (!seen_digit) throw input_error("not a decimal number: '" + std::string(text) + "'");
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_negative = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) exp_negative = text[i++] == '-';
        long e = 0;
        bool exp_digit = false;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            e = e * 10 + (text[i++] - '0');
            exp_digit = true;
            if (e > 4000) throw input_error("exponent out of range: '" + std::string(text) + "'");
        }
        if (!exp_digit) throw input_error("not a decimal number: '" + std::string(text) + "'");
        exponent += exp_negative ? -e : e;
    }
    if (i != text.size()) throw input_error("not a decimal number: '" + std::string(text) + "'");

    // cpp_int reads a leading 0 as an octal prefix.
    const auto nonzero = digits.find_first_not_of('0');
    cpp_int mantissa(nonzero == std::string::npos ? std::string("0") : digits.substr(nonzero));
    if (negative) mantissa = -mantissa;
    cpp_int scale = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
    if (exponent >= 0) return rational(mantissa * scale);
    return rational(mantissa, scale);
}

std::string to_decimal_string(const rational& value) {
    cpp_int num = boost::multiprecision::numerator(value);
    cpp_int den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    unsigned twos = 0, fives = 0;
    cpp_int rest = den;
    while (rest % 2 == 0) { rest /= 2; ++twos; }
    while (rest % 5 == 0) { rest /= 5; ++fives; }
    if (rest != 1) throw input_error("value has no finite decimal expansion");
    const unsigned places = std::max(twos, fives);
    cpp_int scaled = num * boost::multiprecision::pow(cpp_int(10), places) / den;
    const bool negative = scaled < 0;
    std::string digits = (negative ? cpp_int(-scaled) : scaled).str();
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    digits.insert(digits.size() - places, ".");
    return negative ? "-" + digits : digits;
}

namespace {

template <class T>
struct vec2 {
    T x, y;
};

template <class W, class T>
int orientation(const vec2<T>& p, const vec2<T>& q, const vec2<T>& r) {
    const W v = (W(q.x) - W(p.x)) * (W(r.y) - W(p.y)) - (W(q.y) - W(p.y)) * (W(r.x) - W(p.x));
    return (v > 0) - (v < 0);
}

template <class W, class T>
bool cross_exact(const vec2<T>& a1, const vec2<T>& a2, const vec2<T>& b1, const vec2<T>& b2) {
    const int o1 = orientation<W>(a1, a2, b1);
    const int o2 = orientation<W>(a1, a2, b2);
    const int o3 = orientation<W>(b1, b2, a1);
    const int o4 = orientation<W>(b1, b2, a2);

    if (o1 == 0 && o2 == 0) {
        // Collinear: a crossing iff the overlap has positive length.
        const bool use_x = a1.x != a2.x;
        auto coord = [use_x](const vec2<T>& p) -> const T& { return use_x ? p.x : p.y; };
        const T& a_lo = std::min(coord(a1), coord(a2));
        const T& a_hi = std::max(coord(a1), coord(a2));
        const T& b_lo = std::min(coord(b1), coord(b2));
        const T& b_hi = std::max(coord(b1), coord(b2));
        return std::min(a_hi, b_hi) > std::max(a_lo, b_lo);
    }
    if (o1 * o2 > 0 || o3 * o4 > 0) return false;
    // The supporting lines meet in exactly one point, which lies on both
    // segments. It is an endpoint of b iff o1 or o2 vanishes, of a iff o3 or
    // o4 vanishes.
    const bool endpoint_of_b = o1 == 0 || o2 == 0;
    const bool endpoint_of_a = o3 == 0 || o4 == 0;
    return !(endpoint_of_a && endpoint_of_b);
}

using int128 = __int128;

crossing_graph finish(const geometric_graph& g, std::vector<std::pair<int, int>> pairs) {
    const int m = static_cast<int>(g.edges.size());
    std::sort(pairs.begin(), pairs.end());
    std::vector<char> crossed(m, 0);
    for (auto [a, b] : pairs) crossed[a] = crossed[b] = 1;
    std::vector<int> index(m, -1);
    std::vector<int> labels;
    for (int e = 0; e < m; ++e) {
        if (crossed[e]) {
            index[e] = static_cast<int>(labels.size());
            labels.push_back(e);
        }
    }
    for (auto& [a, b] : pairs) {
        a = index[a];
        b = index[b];
    }
    auto x = crossing_graph::from_edges(static_cast<int>(labels.size()), pairs);
    x.set_free_edge_count(m - static_cast<int>(labels.size()));
    x.set_edge_labels(std::move(labels));
    return x;
}

// Coordinates scaled by the least common denominator: exact integers.
template <class T>
struct scaled_drawing {
    std::vector<vec2<T>> points;
};

struct scaled_all {
    bool small = false;  // every |coordinate| < 2^62, so int64/int128 is exact
    scaled_drawing<std::int64_t> fast;
    scaled_drawing<cpp_int> big;
};

scaled_all scale(const geometric_graph& g) {
    cpp_int lcm = 1;
    for (const auto& p : g.vertices) {
        lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(p.x));
        lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(p.y));
    }
    auto to_int = [&lcm](const rational& r) {
        return cpp_int(boost::multiprecision::numerator(r) * (lcm / boost::multiprecision::denominator(r)));
    };
    scaled_all out;
    out.big.points.reserve(g.vertices.size());
    const cpp_int bound = cpp_int(1) << 62;
    bool small = true;
    for (const auto& p : g.vertices) {
        vec2<cpp_int> q{to_int(p.x), to_int(p.y)};
        if (boost::multiprecision::abs(q.x) >= bound || boost::multiprecision::abs(q.y) >= bound) small = false;
        out.big.points.push_back(std::move(q));
    }
    out.small = small;
    if (small) {
        for (const auto& q : out.big.points) {
            out.fast.points.push_back({q.x.convert_to<std::int64_t>(), q.y.convert_to<std::int64_t>()});
        }
        out.big.points.clear();
    }
    return out;
}

template <class W, class T>
bool edges_cross(const std::vector<vec2<T>>& pts, std::pair<int, int> e, std::pair<int, int> f) {
    return cross_exact<W>(pts[e.first], pts[e.second], pts[f.first], pts[f.second]);
}

template <class W, class T>
std::vector<std::pair<int, int>> crossing_pairs_serial(const std::vector<vec2<T>>& pts,
                                                       const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::pair<int, int>> out;
    const int m = static_cast<int>(edges.size());
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (edges_cross<W>(pts, edges[i], edges[j])) out.emplace_back(i, j);
        }
    }
    return out;
}

template <class W, class T>
std::vector<std::pair<int, int>> crossing_pairs_parallel(const std::vector<vec2<T>>& pts,
                                                         const std::vector<std::pair<int, int>>& edges) {
    const int m = static_cast<int>(edges.size());
    std::vector<std::vector<std::pair<int, int>>> per_row(m);
#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < m; ++i) {
        auto& row = per_row[i];
        for (int j = i + 1; j < m; ++j) {
            if (edges_cross<W>(pts, edges[i], edges[j])) row.emplace_back(i, j);
        }
    }
    std::vector<std::pair<int, int>> out;
    for (auto& row : per_row) out.insert(out.end(), row.begin(), row.end());
    return out;
}

}  // namespace

bool segments_cross(const point2d& a1, const point2d& a2, const point2d& b1, const point2d& b2) {
    if (a1 == a2 || b1 == b2) throw input_error("degenerate (zero-length) segment");
    const vec2<rational> p{a1.x, a1.y}, q{a2.x, a2.y}, r{b1.x, b1.y}, s{b2.x, b2.y};
    return cross_exact<rational>(p, q, r, s);
}

void geometric_graph::validate() const {
    const int n = static_cast<int>(vertices.size());
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        const std::string field = "edges[" + std::to_string(i) + "]";
        if (u < 0 || v < 0 || u >= n || v >= n) throw input_error("vertex index out of range", 0, field);
        if (u == v) throw input_error("self-loop", 0, field);
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) throw input_error("duplicate edge", 0, field);
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [this](int a, int b) {
        const auto& p = vertices[a];
        const auto& q = vertices[b];
        return p.x < q.x || (p.x == q.x && p.y < q.y);
    });
    for (int i = 1; i < n; ++i) {
        if (vertices[order[i]] == vertices[order[i - 1]]) {
            throw input_error("coincident with vertex " + std::to_string(std::min(order[i], order[i - 1])), 0,
                              "vertices[" + std::to_string(std::max(order[i], order[i - 1])) + "]");
        }
    }
}

crossing_graph build_crossing_graph(const geometric_graph& g) {
    g.validate();
    auto s = scale(g);
    if (s.small) return finish(g, crossing_pairs_parallel<int128>(s.fast.points, g.edges));
    return finish(g, crossing_pairs_parallel<cpp_int>(s.big.points, g.edges));
}

crossing_graph build_crossing_graph_serial(const geometric_graph& g) {
    g.validate();
    auto s = scale(g);
    if (s.small) return finish(g, crossing_pairs_serial<int128>(s.fast.points, g.edges));
    return finish(g, crossing_pairs_serial<cpp_int>(s.big.points, g.edges));
}

namespace {

// Builds a DOM like json's own parser, except that floating-point literals
// are kept as their source text (stored as strings) so no precision is lost.
class raw_number_sax {
public:
    json root;

    bool null() { return put(nullptr); }
    bool boolean(bool b) { return put(b); }
    bool number_integer(json::number_integer_t v) { return put(v); }
    bool number_unsigned(json::number_unsigned_t v) { return put(v); }
    bool number_float(json::number_float_t, const json::string_t& text) { return put(text); }
    bool string(json::string_t& s) { return put(s); }
    bool binary(json::binary_t&) { return false; }
    bool start_object(std::size_t) {
        stack_.push_back(slot(json::object()));
        return true;
    }
    bool key(json::string_t& k) {
        key_ = k;
        return true;
    }
    bool end_object() {
        stack_.pop_back();
        return true;
    }
    bool start_array(std::size_t) {
        stack_.push_back(slot(json::array()));
        return true;
    }
    bool end_array() {
        stack_.pop_back();
        return true;
    }
    bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) {
        error_position = position;
        error_message = ex.what();
        return false;
    }

    std::size_t error_position = 0;
    std::string error_message;

private:
    json* slot(json value) {
        if (stack_.empty()) {
            root = std::move(value);
            return &root;
        }
        json& parent = *stack_.back();
        if (parent.is_array()) {
            parent.push_back(std::move(value));
            return &parent.back();
        }
        parent[key_] = std::move(value);
        return &parent[key_];
    }
    bool put(json value) {
        slot(std::move(value));
        return true;
    }

    std::vector<json*> stack_;
    std::string key_;
};

rational coordinate(const json& v, const std::string& field) {
    if (v.is_string()) {
        try {
            return parse_decimal(v.get<std::string>());
        } catch (const input_error& e) {
            throw input_error(e.what(), 0, field);
        }
    }
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return rational(cpp_int(v.get<std::uint64_t>()));
        return rational(cpp_int(v.get<std::int64_t>()));
    }
    throw input_error("expected a number or decimal string", 0, field);
}

}  // namespace

geometric_graph parse_geometric_graph(std::string_view json_text) {
    raw_number_sax sax;
    const std::string text(json_text);
    if (!json::sax_parse(text, &sax)) {
        const int line = 1 + static_cast<int>(std::count(text.begin(),
            text.begin() + static_cast<std::ptrdiff_t>(std::min(sax.error_position, text.size())), '\n'));
        throw input_error("malformed JSON: " + sax.error_message, line);
    }
    const json& doc = sax.root;
    if (!doc.is_object()) throw input_error("expected a JSON object", 0, "$");
    if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw input_error("missing array", 0, "vertices");
    if (!doc.contains("edges") || !doc["edges"].is_array()) throw input_error("missing array", 0, "edges");

    geometric_graph g;
    const auto& verts = doc["vertices"];
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const std::string field = "vertices[" + std::to_string(i) + "]";
        if (!verts[i].is_array() || verts[i].size() != 2) throw input_error("expected [x, y]", 0, field);
        g.vertices.push_back({coordinate(verts[i][0], field + "[0]"), coordinate(verts[i][1], field + "[1]")});
    }
    const auto& edges = doc["edges"];
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string field = "edges[" + std::to_string(i) + "]";
        const auto& e = edges[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw input_error("expected [u, v] with integer indices", 0, field);
        }
        const auto u = e[0].get<std::int64_t>();
        const auto v = e[1].get<std::int64_t>();
        if (u < 0 || v < 0 || u > std::numeric_limits<int>::max() || v > std::numeric_limits<int>::max()) {
            throw input_error("vertex index out of range", 0, field);
        }
        g.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    g.validate();
    return g;
}

std::string format_geometric_graph(const geometric_graph& g) {
    json doc;
    doc["vertices"] = json::array();
    for (const auto& p : g.vertices) doc["vertices"].push_back({to_decimal_string(p.x), to_decimal_string(p.y)});
    doc["edges"] = json::array();
    for (auto [u, v] : g.edges) doc["edges"].push_back({u, v});
    return doc.dump() + "\n";
}

}  // namespace pstory
