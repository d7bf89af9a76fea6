#include "fillcert/word.hpp"

#include <cctype>

#include "fillcert/errors.hpp"
#include "fillcert/group_ring.hpp"

namespace fillcert {

FreeWord::FreeWord(int rank, std::vector<Letter> letters) : rank_(rank), letters_(std::move(letters)) {
    for (const auto& l : letters_)
        if (l.generator < 0 || l.generator >= rank_ || (l.exponent != 1 && l.exponent != -1))
            throw InvalidInput("invalid letter in word");
    reduce();
}

FreeWord FreeWord::generator(int rank, int index) { return FreeWord(rank, {Letter{index, 1}}); }

void FreeWord::reduce() {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (const auto& l : letters_) {
        if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent)
            out.pop_back();
        else
            out.push_back(l);
    }
    letters_ = std::move(out);
}

FreeWord FreeWord::inverse() const {
    FreeWord w(rank_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back({it->generator, -it->exponent});
    return w;
}

std::vector<long> FreeWord::abelianization() const {
    std::vector<long> a(rank_, 0);
    for (const auto& l : letters_) a[l.generator] += l.exponent;
    return a;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    if (a.rank_ != b.rank_) throw InvalidInput("word rank mismatch");
    FreeWord w(a.rank_);
    w.letters_ = a.letters_;
    w.letters_.insert(w.letters_.end(), b.letters_.begin(), b.letters_.end());
    w.reduce();
    return w;
}

std::string FreeWord::to_string() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (const auto& l : letters_) {
        if (!out.empty()) out += ' ';
        out += variable_name(l.generator);
        if (l.exponent < 0) out += '\'';
    }
    return out;
}

FreeWord commutator(const FreeWord& a, const FreeWord& b) { return a * b * a.inverse() * b.inverse(); }

FreeWord conjugate(const FreeWord& g, const FreeWord& h) { return h * g * h.inverse(); }

namespace {

// Recursive descent:
//   product := power (('*')? power)*
//   power   := atom ("'" | "^-1" | "^" atom)*
//   atom    := letter | '1' | '[' product ',' product ']' | '(' product ')'
class WordParser {
public:
    WordParser(std::string_view s, int rank) : s_(s), rank_(rank) {}

    FreeWord parse() {
        FreeWord w = product();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw InvalidInput("word parse error at " + std::to_string(pos_) + ": " + why);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek_atom_start() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == '[' || c == '(' || c == '1' || letter_index(c) >= 0;
    }
    int letter_index(char c) const {
        for (int i = 0; i < rank_; ++i)
            if (c == variable_name(i)) return i;
        return -1;
    }

    FreeWord product() {
        FreeWord w = power();
        for (;;) {
            skip();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                w = w * power();
            } else if (peek_atom_start()) {
                w = w * power();
            } else {
                return w;
            }
        }
    }

    FreeWord power() {
        FreeWord w = atom();
        for (;;) {
            skip();
            if (pos_ < s_.size() && s_[pos_] == '\'') {
                ++pos_;
                w = w.inverse();
            } else if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                skip();
                if (s_.substr(pos_, 2) == "-1") {
                    pos_ += 2;
                    w = w.inverse();
                } else {
                    w = conjugate(w, atom());
                }
            } else {
                return w;
            }
        }
    }

    FreeWord atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '[') {
            ++pos_;
            FreeWord a = product();
            expect(',');
            FreeWord b = product();
            expect(']');
            return commutator(a, b);
        }
        if (c == '(') {
            ++pos_;
            FreeWord a = product();
            expect(')');
            return a;
        }
        if (c == '1') {
            ++pos_;
            return FreeWord(rank_);
        }
        int g = letter_index(c);
        if (g < 0) fail(std::string("unknown generator '") + c + "'");
        ++pos_;
        return FreeWord::generator(rank_, g);
    }

    void expect(char c) {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string_view s_;
    int rank_;
    size_t pos_ = 0;
};

}  // namespace

FreeWord parse_word(std::string_view text, int rank) {
    if (rank < 1 || rank > 3) throw InvalidInput("word rank must be 1..3");
    return WordParser(text, rank).parse();
}

}  // namespace fillcert
