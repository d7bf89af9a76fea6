#include "fillcert/group_ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "fillcert/errors.hpp"

namespace fillcert {

char variable_name(int index) {
    static constexpr char names[] = {'x', 'y', 'z', 'w'};
    if (index < 0 || index >= 4) throw InvalidInput("variable index out of range");
    return names[index];
}

namespace {

void require_same_dim(int a, int b) {
    if (a != b) {
        throw InvalidInput("dimension mismatch: " + std::to_string(a) + " vs " +
                           std::to_string(b));
    }
}

// Coefficient of u^m in (1-u)^n, for any integer n: (-1)^m * binom(n, m).
Integer one_minus_power_coeff(int64_t n, int m) {
    Integer num = 1;
    Integer den = 1;
    for (int i = 0; i < m; ++i) {
        num *= Integer(static_cast<long>(n - i));
        den *= i + 1;
    }
    Integer r = num / den;
    return (m % 2 == 0) ? r : Integer(-r);
}

int var_index(char c) {
    switch (c) {
        case 'x': return 0;
        case 'y': return 1;
        case 'z': return 2;
        case 'w': return 3;
        default: return -1;
    }
}

std::string coeff_prefix(const Integer& c, bool first, bool has_monomial) {
    std::string out;
    Integer a = abs(c);
    if (first) {
        if (c < 0) out += "-";
    } else {
        out += (c < 0) ? " - " : " + ";
    }
    if (!has_monomial) {
        out += a.get_str();
    } else if (a != 1) {
        out += a.get_str() + "*";
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(int dim, const Integer& c) {
    LaurentPoly p(dim);
    p.add_term(Exponents(dim, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Exponents& e, const Integer& c) {
    LaurentPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int dim, int index) {
    Exponents e(dim, 0);
    e.at(index) = 1;
    return monomial(e);
}

LaurentPoly LaurentPoly::one_minus(int dim, int index) {
    return constant(dim, 1) - variable(dim, index);
}

LaurentPoly LaurentPoly::difference_monomial(const MultiIndex& alpha) {
    const int dim = static_cast<int>(alpha.size());
    LaurentPoly p = constant(dim, 1);
    for (int i = 0; i < dim; ++i) {
        const LaurentPoly f = one_minus(dim, i);
        for (int r = 0; r < alpha[i]; ++r) p = p * f;
    }
    return p;
}

Integer LaurentPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const Integer& c) {
    require_same_dim(dim_, static_cast<int>(e.size()));
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    require_same_dim(dim_, other.dim_);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    require_same_dim(dim_, other.dim_);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_dim(a.dim_, b.dim_);
    LaurentPoly r(a.dim_);
    Exponents e(a.dim_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.dim_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::translated(const Exponents& shift) const {
    require_same_dim(dim_, static_cast<int>(shift.size()));
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        for (int i = 0; i < dim_; ++i) f[i] += shift[i];
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

LaurentPoly LaurentPoly::evaluate_at_one(int index) const {
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f.at(index) = 0;
        r.add_term(f, c);
    }
    return r;
}

LaurentPoly LaurentPoly::transform_exponents(const std::vector<std::vector<int64_t>>& A) const {
    LaurentPoly r(static_cast<int>(A.size()));
    Exponents f(A.size());
    for (const auto& [e, c] : terms_) {
        for (size_t row = 0; row < A.size(); ++row) {
            require_same_dim(dim_, static_cast<int>(A[row].size()));
            int64_t s = 0;
            for (int i = 0; i < dim_; ++i) s += A[row][i] * e[i];
            f[row] = s;
        }
        r.add_term(f, c);
    }
    return r;
}

LaurentPoly LaurentPoly::divide_one_minus(int index) const {
    // Within each slice (all exponents but `index` fixed), p = q - t q, so
    // q_n = sum_{m <= n} p_m; divisibility means the slice sums to zero.
    std::map<Exponents, std::vector<std::pair<int64_t, Integer>>> slices;
    for (const auto& [e, c] : terms_) {
        Exponents key = e;
        key.at(index) = 0;
        slices[key].emplace_back(e[index], c);
    }
    LaurentPoly q(dim_);
    for (auto& [key, entries] : slices) {
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Integer running = 0;
        for (size_t i = 0; i < entries.size(); ++i) {
            running += entries[i].second;
            const int64_t lo = entries[i].first;
            const int64_t hi = (i + 1 < entries.size()) ? entries[i + 1].first : lo + 1;
            if (running == 0) continue;
            if (i + 1 == entries.size()) {
                throw InvalidInput("polynomial not divisible by (1-" +
                                   std::string(1, variable_name(index)) + ")");
            }
            for (int64_t n = lo; n < hi; ++n) {
                Exponents e = key;
                e[index] = n;
                q.add_term(e, running);
            }
        }
    }
    return q;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (int i = 0; i < dim_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += variable_name(i);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        out += coeff_prefix(c, first, !mono.empty()) + mono;
        first = false;
    }
    return out;
}

Integer augmentation(const LaurentPoly& p) {
    Integer s = 0;
    for (const auto& [e, c] : p.terms()) s += c;
    return s;
}

// ---------------------------------------------------------------- AugClass

Integer AugClass::coefficient(const MultiIndex& alpha) const {
    auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? Integer(0) : it->second;
}

void AugClass::add_term(const MultiIndex& alpha, const Integer& c) {
    require_same_dim(dim_, static_cast<int>(alpha.size()));
    int s = 0;
    for (int a : alpha) {
        if (a < 0) throw InvalidInput("negative multi-index entry");
        s += a;
    }
    if (s != degree_) throw InvalidInput("multi-index degree does not match class degree");
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

AugClass& AugClass::operator+=(const AugClass& other) {
    require_same_dim(dim_, other.dim_);
    if (degree_ != other.degree_) throw InvalidInput("degree mismatch in AugClass sum");
    for (const auto& [a, c] : other.coeffs_) add_term(a, c);
    return *this;
}

AugClass& AugClass::operator*=(const Integer& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [a, v] : coeffs_) v *= c;
    return *this;
}

AugClass operator*(const AugClass& a, const AugClass& b) {
    require_same_dim(a.dim_, b.dim_);
    AugClass r(a.dim_, a.degree_ + b.degree_);
    MultiIndex m(a.dim_);
    for (const auto& [ia, ca] : a.coeffs_) {
        for (const auto& [ib, cb] : b.coeffs_) {
            for (int i = 0; i < a.dim_; ++i) m[i] = ia[i] + ib[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

LaurentPoly AugClass::to_laurent() const {
    LaurentPoly r(dim_);
    for (const auto& [alpha, c] : coeffs_) r += LaurentPoly::difference_monomial(alpha) * c;
    return r;
}

std::string AugClass::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    // Ascending lexicographic order on multi-indices.
    for (const auto& [alpha, c] : coeffs_) {
        std::string mono;
        for (int i = 0; i < dim_; ++i) {
            if (alpha[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += std::string("u_") + variable_name(i);
            if (alpha[i] != 1) mono += "^" + std::to_string(alpha[i]);
        }
        out += coeff_prefix(c, first, !mono.empty()) + mono;
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------- filtration

std::vector<MultiIndex> multi_indices(int dim, int degree) {
    std::vector<MultiIndex> out;
    MultiIndex cur(dim, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == dim - 1) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int a = remaining; a >= 0; --a) {
            cur[pos] = a;
            self(self, pos + 1, remaining - a);
        }
    };
    if (dim == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

std::map<MultiIndex, Integer> u_expansion(const LaurentPoly& p, int maxdeg) {
    std::map<MultiIndex, Integer> out;
    const int dim = p.dim();
    MultiIndex cur(dim, 0);
    for (const auto& [e, c] : p.terms()) {
        std::vector<std::vector<Integer>> series(dim);
        for (int i = 0; i < dim; ++i) {
            series[i].reserve(maxdeg + 1);
            for (int m = 0; m <= maxdeg; ++m) series[i].push_back(one_minus_power_coeff(e[i], m));
        }
        auto rec = [&](auto&& self, int pos, int budget, const Integer& acc) -> void {
            if (pos == dim) {
                auto [it, inserted] = out.try_emplace(cur, acc);
                if (!inserted) it->second += acc;
                return;
            }
            for (int m = 0; m <= budget; ++m) {
                const Integer& s = series[pos][m];
                if (s == 0) continue;
                cur[pos] = m;
                self(self, pos + 1, budget - m, acc * s);
            }
            cur[pos] = 0;
        };
        rec(rec, 0, maxdeg, c);
    }
    for (auto it = out.begin(); it != out.end();) {
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    }
    return out;
}

namespace {
int total_degree(const MultiIndex& a) {
    int s = 0;
    for (int v : a) s += v;
    return s;
}
}  // namespace

AugClass reduce_mod_filtration(const LaurentPoly& p, int k) {
    if (k < 0) throw InvalidInput("filtration degree must be nonnegative");
    AugClass out(p.dim(), k);
    int lowest = k + 1;
    for (const auto& [alpha, c] : u_expansion(p, k)) {
        const int deg = total_degree(alpha);
        if (deg < k) {
            lowest = std::min(lowest, deg);
            continue;
        }
        out.add_term(alpha, c);
    }
    if (lowest <= k - 1) {
        throw FiltrationError("element not in I^" + std::to_string(k) + ": degree-" +
                                  std::to_string(lowest) + " term survives",
                              lowest);
    }
    return out;
}

std::optional<int> filtration_degree(const LaurentPoly& p, int maxdeg) {
    if (maxdeg < 0) throw InvalidInput("maxdeg must be nonnegative");
    std::optional<int> lowest;
    for (const auto& [alpha, c] : u_expansion(p, maxdeg)) {
        const int deg = total_degree(alpha);
        if (!lowest || deg < *lowest) lowest = deg;
    }
    return lowest;
}

// ---------------------------------------------------------------- parsing

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view s) : s_(s) {}
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool accept_word(std::string_view w) {
        skip_ws();
        if (s_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }
    std::optional<Integer> number() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) return std::nullopt;
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }
    int64_t signed_int() {
        bool neg = accept('-');
        auto n = number();
        if (!n) fail("expected integer exponent");
        int64_t v = n->get_si();
        return neg ? -v : v;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw InvalidInput("parse error at position " + std::to_string(pos_) + ": " + msg +
                           " in \"" + std::string(s_) + "\"");
    }

private:
    std::string_view s_;
    size_t pos_ = 0;
};

// Parses one signed term: [coef] ['*'] factor ('*' factor)*; `factor` is
// supplied by the caller and accumulates into its own state.
template <class Factor>
Integer parse_terms(Scanner& sc, Factor&& factor, auto&& emit) {
    bool first = true;
    while (!sc.done()) {
        Integer sign = 1;
        if (sc.accept('+')) {
        } else if (sc.accept('-')) {
            sign = -1;
        } else if (!first) {
            sc.fail("expected '+' or '-'");
        }
        first = false;
        Integer coef = 1;
        bool have_any = false;
        if (auto n = sc.number()) {
            coef = *n;
            have_any = true;
            if (!sc.accept('*')) {
                emit(sign * coef, false);
                continue;
            }
        }
        bool more = true;
        bool have_factor = false;
        while (more) {
            if (!factor(sc)) {
                if (!have_any || have_factor) sc.fail("expected factor");
                break;
            }
            have_factor = true;
            more = sc.accept('*');
        }
        emit(sign * coef, have_factor);
    }
    return 0;
}

}  // namespace

namespace {

// expr := ['+'|'-'] term (('+'|'-') term)*
// term := factor (['*'] factor)*
// factor := (integer | variable | '(' expr ')') ['^' signed integer]
class LaurentParser {
public:
    LaurentParser(std::string_view text, int dim) : sc_(text), dim_(dim) {}

    LaurentPoly parse() {
        if (sc_.done()) sc_.fail("empty polynomial");
        LaurentPoly p = expr();
        if (!sc_.done()) sc_.fail("unexpected character");
        return p;
    }

private:
    LaurentPoly expr() {
        LaurentPoly out(dim_);
        bool first = true;
        while (true) {
            Integer sign = 1;
            if (sc_.accept('-'))
                sign = -1;
            else if (!sc_.accept('+') && !first)
                break;
            first = false;
            out += sign * term();
        }
        return out;
    }

    bool starts_factor() {
        const char c = sc_.peek();
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || var_index(c) >= 0;
    }

    LaurentPoly term() {
        LaurentPoly p = factor();
        while (true) {
            if (sc_.accept('*'))
                p = p * factor();
            else if (starts_factor())
                p = p * factor();
            else
                return p;
        }
    }

    LaurentPoly factor() {
        LaurentPoly base(dim_);
        const char c = sc_.peek();
        if (sc_.accept('(')) {
            base = expr();
            if (!sc_.accept(')')) sc_.fail("expected ')'");
        } else if (auto n = sc_.number()) {
            base = LaurentPoly::constant(dim_, *n);
        } else if (const int idx = var_index(c); idx >= 0) {
            sc_.accept(c);
            if (idx >= dim_) sc_.fail(std::string("variable '") + c + "' exceeds dimension");
            base = LaurentPoly::variable(dim_, idx);
        } else {
            sc_.fail("expected factor");
        }
        if (!sc_.accept('^')) return base;
        const int64_t n = sc_.signed_int();
        if (n < 0) {
            if (base.terms().size() != 1 || abs(base.terms().begin()->second) != 1)
                sc_.fail("negative power of a non-unit");
            Exponents e = base.terms().begin()->first;
            for (auto& x : e) x = -x;
            base = LaurentPoly::monomial(e, base.terms().begin()->second);
        }
        LaurentPoly out = LaurentPoly::constant(dim_, 1);
        for (int64_t i = 0; i < (n < 0 ? -n : n); ++i) out = out * base;
        return out;
    }

    Scanner sc_;
    int dim_;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, int dim) { return LaurentParser(text, dim).parse(); }

AugClass parse_aug_class(std::string_view text, int dim, int degree) {
    Scanner sc(text);
    AugClass out(dim, degree);
    MultiIndex cur(dim, 0);
    auto factor = [&](Scanner& s) -> bool {
        if (!s.accept_word("u_")) return false;
        const char c = s.peek();
        const int idx = var_index(c);
        if (idx < 0 || idx >= dim) s.fail("bad u-variable");
        s.accept(c);
        int power = 1;
        if (s.accept('^')) power = static_cast<int>(s.signed_int());
        if (power < 0) s.fail("negative power of u-variable");
        cur[idx] += power;
        return true;
    };
    auto emit = [&](const Integer& c, bool) {
        if (c != 0) out.add_term(cur, c);
        std::fill(cur.begin(), cur.end(), 0);
    };
    if (sc.done()) sc.fail("empty class");
    parse_terms(sc, factor, emit);
    return out;
}

std::string difference_monomial_label(const MultiIndex& alpha) {
    std::string out;
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0) continue;
        out += std::string("(1-") + variable_name(static_cast<int>(i)) + ")";
        if (alpha[i] != 1) out += "^" + std::to_string(alpha[i]);
    }
    return out;
}

}  // namespace fillcert
