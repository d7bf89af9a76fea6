#pragma once

// Reduced words in a free group of rank d, generators x, y, z.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fillcert {

struct Letter {
    int generator = 0;  // 0-based
    int exponent = 1;   // +1 or -1
    friend bool operator==(const Letter&, const Letter&) = default;
};

class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(int rank) : rank_(rank) {}
    FreeWord(int rank, std::vector<Letter> letters);

    static FreeWord generator(int rank, int index);

    int rank() const noexcept { return rank_; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    size_t length() const noexcept { return letters_.size(); }
    bool is_identity() const noexcept { return letters_.empty(); }

    FreeWord inverse() const;
    /// Exponent sum per generator.
    std::vector<long> abelianization() const;

    friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
    friend bool operator==(const FreeWord&, const FreeWord&) = default;

    /// "x y z' x'" style; "1" for the identity.
    std::string to_string() const;

private:
    void reduce();

    int rank_ = 0;
    std::vector<Letter> letters_;
};

/// [a,b] = a b a^-1 b^-1.
FreeWord commutator(const FreeWord& a, const FreeWord& b);
/// g^h = h g h^-1.
FreeWord conjugate(const FreeWord& g, const FreeWord& h);

/// Parse words such as "x y' x' y", "[[x,y],z]", "[x,y]*[y,x]^y", "x^-1".
/// Juxtaposition and '*' multiply; "'" and "^-1" invert; "^w" conjugates.
FreeWord parse_word(std::string_view text, int rank);

}  // namespace fillcert
