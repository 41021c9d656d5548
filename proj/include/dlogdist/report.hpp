#ifndef DLOGDIST_REPORT_HPP
#define DLOGDIST_REPORT_HPP

// Literal parsing, tabular experiment output (CSV and JSON) and the row builders shared by the
// command-line tool and the tests.
//
// Literals:
//   field element   "c0:c1:...:c_{n-1}" (coordinates, lowest first) or a plain integer (prime field)
//   polynomial      comma-separated coefficients, lowest degree first: "1,0:1,2" = 1 + x*alpha + 2x^2
//   polynomial list semicolon-separated polynomials: "0,1;1,1" = (x, 1 + x)
//   integer list    "2,2"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "applications.hpp"

namespace dlogdist {

inline constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------------------------------------
// Parsing

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

inline std::int64_t parse_int(std::string_view text) {
    const std::string s = trim(text);
    std::int64_t v = 0;
    const char* first = s.data();
    if (!s.empty() && s[0] == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError("not an integer: '" + s + "'");
    return v;
}

inline std::vector<std::int64_t> parse_int_list(std::string_view text) {
    std::vector<std::int64_t> out;
    for (const auto& tok : split(text, ',')) out.push_back(parse_int(tok));
    return out;
}

inline std::vector<std::uint64_t> parse_divisors(std::string_view text) {
    std::vector<std::uint64_t> out;
    for (auto v : parse_int_list(text)) {
        if (v < 0) throw ParseError("divisors must be positive");
        out.push_back(static_cast<std::uint64_t>(v));
    }
    return out;
}

inline Elem parse_element(const Field& F, std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() == 1) return F.from_int(parse_int(parts[0]));
    if (parts.size() != F.n())
        throw ParseError("element '" + std::string(text) + "' needs " + std::to_string(F.n()) + " coordinates");
    std::vector<std::uint32_t> c;
    for (const auto& part : parts) {
        const auto v = parse_int(part);
        if (v < 0 || v >= static_cast<std::int64_t>(F.p())) throw ParseError("coordinate out of range in '" + std::string(text) + "'");
        c.push_back(static_cast<std::uint32_t>(v));
    }
    return F.from_coords(c);
}

inline Poly parse_poly(const Field& F, std::string_view text) {
    std::vector<Elem> c;
    for (const auto& tok : split(text, ',')) c.push_back(parse_element(F, tok));
    return Poly(std::move(c));
}

inline std::vector<Poly> parse_poly_list(const Field& F, std::string_view text) {
    std::vector<Poly> out;
    for (const auto& tok : split(text, ';')) out.push_back(parse_poly(F, tok));
    return out;
}

inline std::vector<Elem> parse_element_list(const Field& F, std::string_view text) {
    std::vector<Elem> out;
    for (const auto& tok : split(text, ';')) out.push_back(parse_element(F, tok));
    return out;
}

inline ZPoly parse_zpoly(std::string_view text) {
    std::vector<BigInt> c;
    for (const auto& tok : split(text, ',')) {
        const std::string s = trim(tok);
        if (s.empty() || s.find_first_not_of("+-0123456789") != std::string::npos || s.find_first_of("0123456789") == std::string::npos)
            throw ParseError("not an integer coefficient: '" + s + "'");
        c.emplace_back(s[0] == '+' ? s.substr(1) : s);
    }
    return ZPoly(std::move(c));
}

// ---------------------------------------------------------------------------------------------
// Formatting

inline std::string format_element(const Field& F, Elem x) {
    if (F.n() == 1) return std::to_string(x.index);
    std::string s;
    for (auto c : F.coords(x)) s += (s.empty() ? "" : ":") + std::to_string(c);
    return s;
}

inline std::string format_poly(const Field& F, const Poly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < f.c.size(); ++i) s += (i ? "," : "") + format_element(F, f.c[i]);
    return s;
}

inline std::string format_poly_list(const Field& F, const std::vector<Poly>& ps) {
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ";" : "") + format_poly(F, ps[i]);
    return s;
}

template <class Int>
std::string format_list(const std::vector<Int>& v, char sep = ',') {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
    return s;
}

inline std::string format_zpoly(const ZPoly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < f.c.size(); ++i) s += (i ? "," : "") + f.c[i].str();
    return s;
}

/// Shortest round-trip representation of a double.
inline std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

/// Reproducibility descriptor: p, n, modulus coefficients and theta's coordinates.
inline nlohmann::json field_descriptor(const Field& F) {
    return {{"p", F.p()}, {"n", F.n()}, {"q", F.q()}, {"modulus", F.modulus()}, {"theta", F.coords(F.theta())}};
}

// ---------------------------------------------------------------------------------------------
// Tables

/// One experiment's output: column names and rows of scalar JSON values.
struct Table {
    std::string command;
    std::string anchor;  // which result the rows check
    nlohmann::json config = nlohmann::json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::json>> rows;

    void add_row(std::vector<nlohmann::json> row) {
        if (row.size() != columns.size()) throw std::logic_error("row width does not match the header");
        rows.push_back(std::move(row));
    }
};

struct Experiment {
    Table table;
    bool assertions_pass = true;
};

inline std::string csv_cell(const nlohmann::json& v) {
    std::string s;
    if (v.is_null())
        s = "";
    else if (v.is_string())
        s = v.get<std::string>();
    else if (v.is_boolean())
        s = v.get<bool>() ? "true" : "false";
    else if (v.is_number_float())
        s = format_double(v.get<double>());
    else
        s = v.dump();
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    return quoted + "\"";
}

inline std::string to_csv(const Table& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_cell(t.columns[i]);
    os << "\r\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << "\r\n";
    }
    return os.str();
}

/// RFC-4180 reader: quoted fields, doubled quotes, CRLF or LF line ends.
inline std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false, any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (quoted) {
            if (ch == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                field += ch;
            }
            continue;
        }
        any = true;
        if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            row.push_back(std::move(field));
            field.clear();
        } else if (ch == '\n' || ch == '\r') {
            if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            row.push_back(std::move(field));
            field.clear();
            out.push_back(std::move(row));
            row.clear();
            any = false;
        } else {
            field += ch;
        }
    }
    if (any || !field.empty() || !row.empty()) {
        row.push_back(std::move(field));
        out.push_back(std::move(row));
    }
    return out;
}

inline nlohmann::json to_json(const Table& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i];
        rows.push_back(std::move(obj));
    }
    return {{"schema_version", kSchemaVersion}, {"command", t.command}, {"anchor", t.anchor},
            {"config", t.config},                {"columns", t.columns}, {"rows", std::move(rows)}};
}

// ---------------------------------------------------------------------------------------------
// Experiments

inline Experiment count_experiment(const Field& F, const TupleSpec& spec, unsigned threads = 1,
                                   std::uint64_t max_cells = kDefaultMaxCells) {
    const auto dist = full_distribution(F, spec, threads, max_cells);
    Experiment ex;
    auto& t = ex.table;
    t.command = "count";
    t.anchor = "count N(P, a(d), q) = q/(d_1...d_k) + H with |H| < Z(P) sqrt(q)";
    t.config = {{"field", field_descriptor(F)}, {"polys", format_poly_list(F, spec.polys)},
                {"divisors", format_list(spec.divisors)}, {"threads", threads}};
    t.columns = {"q", "polys", "divisors", "a", "N", "main_num", "main_den", "H_num", "Z", "bound", "independent",
                 "within_bound", "excluded"};
    const std::string polys = format_poly_list(F, spec.polys), divs = format_list(spec.divisors);
    for (const auto& c : dist.cells) {
        t.add_row({F.q(), polys, divs, format_list(c.a), c.N, c.main_num, c.main_den, c.H_num, c.Z, c.bound,
                   dist.verdict.independent(),
                   c.within_bound ? nlohmann::json(*c.within_bound) : nlohmann::json(nullptr), c.excluded});
        if (c.within_bound && !*c.within_bound) ex.assertions_pass = false;
    }
    return ex;
}

inline Experiment indep_experiment(const Field& F, const TupleSpec& spec, std::uint64_t max_cells = kDefaultMaxCells) {
    const auto verdict = check_independence(F, spec, max_cells);
    Experiment ex;
    auto& t = ex.table;
    t.command = "indep";
    t.anchor = "d-multiplicative independence";
    t.config = {{"field", field_descriptor(F)}, {"polys", format_poly_list(F, spec.polys)},
                {"divisors", format_list(spec.divisors)}};
    t.columns = {"q", "polys", "divisors", "L", "independent", "a", "u", "G", "v", "checked", "identity_holds"};
    const std::string polys = format_poly_list(F, spec.polys), divs = format_list(spec.divisors);
    if (verdict.independent()) {
        t.add_row({F.q(), polys, divs, spec.lcm(), true, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr});
        return ex;
    }
    const auto& w = *verdict.witness;
    const auto rep = dependence_identity(F, spec, w);
    t.add_row({F.q(), polys, divs, spec.lcm(), false, format_list(w.a), format_element(F, w.u), format_poly(F, w.G),
               rep.v, rep.checked, rep.all_hold});
    ex.assertions_pass = rep.all_hold;
    return ex;
}

/// Weil sums for every character of exact order r.
inline Experiment weil_experiment(const Field& F, const Poly& f, std::uint64_t r) {
    const CharacterTable T(F);
    Experiment ex;
    auto& t = ex.table;
    t.command = "weil";
    t.anchor = "|sum_c eta(F(c))| <= (z - 1) sqrt(q)";
    t.config = {{"field", field_descriptor(F)}, {"poly", format_poly(F, f)}, {"order", r}};
    t.columns = {"q", "poly", "k", "order", "sum_re", "sum_im", "abs_sum", "z", "bound", "applicable", "pass"};
    for (auto chi : characters_of_order(F, r)) {
        const auto rep = weil_bound_check(T, chi, f);
        t.add_row({F.q(), format_poly(F, f), chi.k, rep.order, rep.sum.real(), rep.sum.imag(), std::abs(rep.sum), rep.z,
                   rep.bound, rep.applicable, rep.pass});
        if (!rep.pass) ex.assertions_pass = false;
    }
    return ex;
}

inline std::vector<std::uint32_t> primes_in_range(std::uint64_t lo, std::uint64_t hi, std::uint64_t every = 1) {
    std::vector<std::uint32_t> out;
    std::uint64_t seen = 0;
    for (std::uint64_t v = lo; v <= hi; ++v)
        if (detail::is_prime(v) && seen++ % every == 0) out.push_back(static_cast<std::uint32_t>(v));
    return out;
}

inline Experiment squares_experiment(const ZPoly& f, const std::vector<std::uint32_t>& primes) {
    Experiment ex;
    auto& t = ex.table;
    t.command = "squares";
    t.anchor = "n_{i,j}(p) / p -> 1/4 for the pair (x, f)";
    t.config = {{"f", format_zpoly(f)}, {"primes", primes.size()}};
    t.columns = {"p", "f", "n_sq_sq", "n_sq_nsq", "n_nsq_sq", "n_nsq_nsq", "excluded", "Z", "independent",
                 "max_abs_error", "max_ratio_error", "within_bound"};
    for (auto p : primes) {
        if (p == 2) continue;
        const auto qc = square_quadrant_counts(f, p);
        double max_err = 0.0;
        for (int i : {1, -1})
            for (int j : {1, -1}) max_err = std::max(max_err, std::abs(static_cast<double>(qc.at(i, j)) - p / 4.0));
        t.add_row({p, format_zpoly(f), qc.at(1, 1), qc.at(1, -1), qc.at(-1, 1), qc.at(-1, -1), qc.excluded, qc.Z,
                   qc.independent, max_err, max_err / p, qc.bounds_hold});
        if (!qc.bounds_hold) ex.assertions_pass = false;
    }
    return ex;
}

inline Experiment primroots_experiment(const ZPoly& f, const std::vector<std::uint32_t>& primes) {
    Experiment ex;
    auto& t = ex.table;
    t.command = "primroots";
    t.anchor = "g_{p,f} = p phi(p-1)/(p-1) + error, |error| < 2^s e sqrt(p)";
    t.config = {{"f", format_zpoly(f)}, {"primes", primes.size()}};
    t.columns = {"p", "f", "g", "predicted", "error", "error_bound", "s", "e", "asserted", "pass"};
    for (auto p : primes) {
        const Field F(FieldSpec{p, 1});
        if (reduce_mod_p(F, f).vanished) continue;
        const auto rep = primitive_root_image_count(F, f);
        t.add_row({p, format_zpoly(f), rep.g, rep.predicted, static_cast<double>(rep.g) - rep.predicted, rep.error_bound,
                   rep.s, rep.e, rep.asserted, rep.pass});
        if (!rep.pass) ex.assertions_pass = false;
    }
    return ex;
}

inline Experiment subspace_experiment(const Field& F, const AffineSpace& V, std::uint64_t d) {
    const auto dist = subspace_log_distribution(F, V, d);
    Experiment ex;
    auto& t = ex.table;
    t.command = "subspace";
    t.anchor = "V_{a(d)} = p^t/d + r(a, d), |r(a, d)| < p^{n/2}";
    std::string basis;
    for (std::size_t i = 0; i < V.basis.size(); ++i) basis += (i ? ";" : "") + format_element(F, V.basis[i]);
    t.config = {{"field", field_descriptor(F)}, {"basis", basis}, {"offset", format_element(F, V.offset)}, {"d", d}};
    t.columns = {"q", "t", "d", "a", "count", "main_num", "main_den", "error", "error_bound", "pass"};
    for (std::uint64_t a = 0; a < d; ++a) {
        t.add_row({F.q(), V.dim(), d, a, dist.cells[a], dist.points, d, dist.error(a), dist.error_bound,
                   static_cast<bool>(dist.within[a])});
        if (!dist.within[a]) ex.assertions_pass = false;
    }
    if (V.offset.index == 0) {
        const auto sp = subspace_poly(F, V);
        t.config["subspace_poly"] = format_poly(F, sp.L);
        t.config["subspace_poly_verified"] = sp.verified();
        if (!sp.verified()) ex.assertions_pass = false;
    }
    return ex;
}

inline Experiment digits_experiment(const DigitBasis& B, std::uint64_t d) {
    const Field& F = B.field();
    Experiment ex;
    auto& t = ex.table;
    t.command = "digits";
    t.anchor = "n_{c,d} = p^{n-1}/d + h_{c,d}, |h_{c,d}| <= p^{n/2}";
    std::string basis;
    for (std::size_t i = 0; i < B.elements().size(); ++i) basis += (i ? ";" : "") + format_element(F, B.elements()[i]);
    t.config = {{"field", field_descriptor(F)}, {"basis", basis}, {"d", d}};
    t.columns = {"q", "d", "c", "count", "preimages", "main_num", "main_den", "error", "error_bound", "pass"};
    for (const auto& r : digit_power_table(B, d)) {
        t.add_row({F.q(), d, r.c, r.count, r.preimages, r.main_num, r.main_den, r.error, r.error_bound, r.pass});
        if (!r.pass) ex.assertions_pass = false;
    }
    return ex;
}

}  // namespace dlogdist

#endif
