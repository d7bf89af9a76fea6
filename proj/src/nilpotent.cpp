#include "fillcert/nilpotent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "fillcert/errors.hpp"
#include "fillcert/lattice.hpp"

namespace fillcert {

namespace {

size_t ipow_size(int base, int e) {
    size_t r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<size_t>(base);
    return r;
}

}  // namespace

MagnusSeries::MagnusSeries(int rank, int max_degree) : rank_(rank), max_degree_(max_degree) {
    if (rank < 1 || max_degree < 0) throw InvalidInput("invalid Magnus series shape");
    for (int L = 0; L <= max_degree; ++L) coeffs_.emplace_back(ipow_size(rank, L));
}

MagnusSeries MagnusSeries::one(int rank, int max_degree) {
    MagnusSeries s(rank, max_degree);
    s.coeffs_[0][0] = 1;
    return s;
}

Integer MagnusSeries::coefficient(const std::vector<int>& monomial) const {
    const int L = static_cast<int>(monomial.size());
    if (L > max_degree_) throw InvalidInput("monomial exceeds truncation degree");
    size_t idx = 0;
    for (int g : monomial) idx = idx * rank_ + static_cast<size_t>(g);
    return coeffs_[L][idx];
}

MagnusSeries operator*(const MagnusSeries& a, const MagnusSeries& b) {
    if (a.rank_ != b.rank_) throw InvalidInput("Magnus rank mismatch");
    const int D = std::min(a.max_degree_, b.max_degree_);
    MagnusSeries c(a.rank_, D);
    for (int i = 0; i <= D; ++i)
        for (int j = 0; i + j <= D; ++j) {
            const size_t nb = b.coeffs_[j].size();
            for (size_t ia = 0; ia < a.coeffs_[i].size(); ++ia) {
                const Integer& x = a.coeffs_[i][ia];
                if (x == 0) continue;
                for (size_t ib = 0; ib < nb; ++ib) {
                    const Integer& y = b.coeffs_[j][ib];
                    if (y != 0) c.coeffs_[i + j][ia * nb + ib] += x * y;
                }
            }
        }
    return c;
}

std::string MagnusSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int L = 0; L <= max_degree_; ++L)
        for (size_t idx = 0; idx < coeffs_[L].size(); ++idx) {
            const Integer& c = coeffs_[L][idx];
            if (c == 0) continue;
            std::string mono;
            size_t rest = idx;
            for (int p = 0; p < L; ++p) {
                mono.insert(mono.begin(), static_cast<char>(std::toupper(variable_name(static_cast<int>(rest % rank_)))));
                rest /= rank_;
            }
            const Integer mag = abs(c);
            if (first)
                os << (c < 0 ? "-" : "");
            else
                os << (c < 0 ? " - " : " + ");
            if (mono.empty())
                os << mag.get_str();
            else
                os << (mag == 1 ? "" : mag.get_str() + "*") << mono;
            first = false;
        }
    return first ? "0" : os.str();
}

MagnusSeries magnus(const FreeWord& w, int max_degree) {
    if (max_degree < 1) throw InvalidInput("Magnus truncation degree must be at least 1");
    const int d = w.rank();
    MagnusSeries acc = MagnusSeries::one(d, max_degree);
    for (const auto& l : w.letters()) {
        // Right multiplication by 1 + X_i or by sum_m (-1)^m X_i^m.
        MagnusSeries next(d, max_degree);
        for (int L = 0; L <= max_degree; ++L) {
            const IntVector& src = acc.degree(L);
            for (size_t idx = 0; idx < src.size(); ++idx) {
                if (src[idx] == 0) continue;
                size_t target = idx;
                for (int m = 0; L + m <= max_degree; ++m) {
                    if (m > 0) target = target * d + static_cast<size_t>(l.generator);
                    if (l.exponent > 0 && m > 1) break;
                    const Integer v = (l.exponent < 0 && m % 2 == 1) ? Integer(-src[idx]) : src[idx];
                    next.degree(L + m)[target] += v;
                }
            }
        }
        acc = std::move(next);
    }
    return acc;
}

std::optional<int> lcs_depth(const FreeWord& w, int max_degree) {
    const MagnusSeries s = magnus(w, max_degree);
    for (int L = 1; L <= max_degree; ++L)
        for (const auto& c : s.degree(L))
            if (c != 0) return L;
    return std::nullopt;
}

FreeWord basic_commutator(const std::vector<int>& letters, int rank) {
    if (letters.size() < 2) throw InvalidInput("a basic commutator needs at least two letters");
    if (letters[0] == letters[1]) throw InvalidInput("degenerate commutator: first two letters coincide");
    FreeWord w = FreeWord::generator(rank, letters[0]);
    for (size_t i = 1; i < letters.size(); ++i) w = commutator(w, FreeWord::generator(rank, letters[i]));
    return w;
}

std::vector<HallElement> hall_basis(int rank, int max_weight) {
    std::vector<HallElement> basis;
    for (int g = 0; g < rank; ++g) {
        HallElement e;
        e.generator = g;
        e.text = std::string(1, variable_name(g));
        e.word = FreeWord::generator(rank, g);
        basis.push_back(std::move(e));
    }
    for (int n = 2; n <= max_weight; ++n) {
        const size_t existing = basis.size();
        for (size_t i = 0; i < existing; ++i)
            for (size_t j = 0; j < i; ++j) {
                const HallElement& a = basis[i];
                const HallElement& b = basis[j];
                if (a.weight + b.weight != n) continue;
                if (a.weight > 1 && a.right > static_cast<int>(j)) continue;
                HallElement e;
                e.weight = n;
                e.left = static_cast<int>(i);
                e.right = static_cast<int>(j);
                e.text = "[" + a.text + "," + b.text + "]";
                e.word = commutator(a.word, b.word);
                basis.push_back(std::move(e));
            }
    }
    return basis;
}

Integer witt_rank(int rank, int k) {
    if (rank < 1 || k < 1) throw InvalidInput("witt_rank needs rank >= 1 and k >= 1");
    auto mobius = [](int n) {
        int result = 1;
        for (int p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
        return n > 1 ? -result : result;
    };
    Integer sum = 0;
    for (int m = 1; m <= k; ++m) {
        if (k % m) continue;
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(rank), static_cast<unsigned long>(k / m));
        sum += mobius(m) * p;
    }
    return sum / k;
}

size_t hall_leading_rank(int rank, int k) {
    std::vector<IntVector> rows;
    for (const auto& e : hall_basis(rank, k))
        if (e.weight == k) rows.push_back(magnus(e.word, k).degree(k));
    if (rows.empty()) return 0;
    IntMatrix m(rows.size(), rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
    return bareiss_rank(m);
}

Model word_model(int rank) {
    if (rank == 2) return Model::Planar2;
    if (rank == 3) return Model::Cubical3;
    throw InvalidInput("word model needs rank 2 or 3");
}

IntVector phi_k(const FreeWord& w, int k) {
    if (k < 2) throw InvalidInput("phi_k needs k >= 2");
    for (long a : w.abelianization())
        if (a != 0) throw InvalidInput("word is not in the commutator subgroup");
    if (k > 2 && lcs_depth(w, k - 1)) throw InvalidInput("word is not in F_" + std::to_string(k));
    const Model m = word_model(w.rank());
    return normal_form(cycle_to_plaquettes(word_to_cycle(w), m), k - 2);
}

PlaquetteChain phi_closed_form(const std::vector<int>& letters, int rank) {
    if (letters.size() < 2 || letters[0] == letters[1]) throw InvalidInput("not a basic commutator");
    const Model m = word_model(rank);
    const int a = letters[0];
    const int b = letters[1];
    int gen = 0;
    long sign = 1;
    if (rank == 3) {
        gen = 3 - a - b;
        sign = (b == (a + 1) % 3) ? 1 : -1;
    } else {
        sign = a < b ? 1 : -1;
    }
    LaurentPoly mult = LaurentPoly::constant(rank, sign);
    for (size_t i = 2; i < letters.size(); ++i) mult = mult * LaurentPoly::one_minus(rank, letters[i]);
    return PlaquetteChain::generator(m, gen, mult);
}

bool SurjectivityReport::ok() const {
    if (witnesses.empty()) return false;
    for (const auto& w : witnesses)
        if (!w.verified) return false;
    return true;
}

SurjectivityReport phi_surjectivity_check(int k, int rank) {
    if (k < 2) throw InvalidInput("phi surjectivity needs k >= 2");
    const Model m = word_model(rank);
    const QuotientBasis basis = basis_J(k - 2, m);
    SurjectivityReport rep;
    rep.k = k;
    rep.rank = rank;
    for (size_t i = 0; i < basis.size(); ++i) {
        const auto& el = basis.elements[i];
        std::vector<int> letters;
        if (rank == 3)
            letters = {(el.generator + 1) % 3, (el.generator + 2) % 3};
        else
            letters = {0, 1};
        for (int v = 0; v < rank; ++v)
            for (int p = 0; p < el.alpha[v]; ++p) letters.push_back(v);
        const FreeWord w = basic_commutator(letters, rank);
        SurjectivityWitness wit;
        wit.element = el.label;
        std::string text = "[" + std::string(1, variable_name(letters[0])) + "," + variable_name(letters[1]) + "]";
        for (size_t p = 2; p < letters.size(); ++p) text = "[" + text + "," + variable_name(letters[p]) + "]";
        wit.word = text;
        IntVector expect(basis.size());
        expect[i] = 1;
        wit.verified = phi_k(w, k) == expect;
        rep.witnesses.push_back(std::move(wit));
    }
    return rep;
}

SesRanks ses_ranks(int k, int rank) {
    if (k < 2) throw InvalidInput("ses_ranks needs k >= 2");
    SesRanks r;
    r.k = k;
    r.lcs_quotient = witt_rank(rank, k);
    r.target = basis_J(k - 2, word_model(rank)).size();
    std::vector<IntVector> rows;
    for (const auto& e : hall_basis(rank, k))
        if (e.weight == k) rows.push_back(phi_k(e.word, k));
    IntMatrix m(rows.size(), r.target);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t c = 0; c < r.target; ++c) m(i, c) = rows[i][c];
    r.image = bareiss_rank(m);
    r.kernel = r.lcs_quotient - static_cast<long>(r.image);
    return r;
}

}  // namespace fillcert
