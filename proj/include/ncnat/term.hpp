#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ncnat {

// Default magnitude budget. Strata up to this magnitude can be enumerated and
// closed; the verification of the non-cancellative product needs magnitude 16.
inline constexpr int kDefaultNMax = 16;

// Hard cap of the packed bit-code representation (2n-1 bits must fit in 64).
inline constexpr int kMaxMagnitude = 32;

// A term of the free magma on one generator: either the generator "1" or a
// sum (l r) of two terms. Equivalently, a full binary rooted tree whose
// leaves are all "1". Immutable value; copies share structure.
class Term {
public:
    // The generator "1".
    Term() = default;

    static Term leaf() { return Term(); }
    static Term node(Term left, Term right);

    bool is_leaf() const noexcept { return node_ == nullptr; }

    // Child access; throws std::logic_error on a leaf.
    const Term& left() const;
    const Term& right() const;

    // Number of leaves. Additive over node(), multiplicative over grafting.
    int magnitude() const noexcept;

    // Canonical text: "1" or "(l r)" with exactly one space between children.
    std::string to_string() const;

    // Inverse of to_string. Grammar: term := "1" | "(" term term ")".
    // Whitespace between tokens is tolerated; output of to_string is canonical.
    static Term parse(std::string_view text);

    // Structural equality (same tree).
    friend bool operator==(const Term& a, const Term& b);

    // Canonical order: magnitude first, then preorder bit code
    // (internal node = 1, leaf = 0) lexicographically.
    std::strong_ordering operator<=>(const Term& other) const;

    std::size_t hash() const noexcept;

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_; // nullptr = leaf
};

struct Term::Node {
    Term left;
    Term right;
    int magnitude;
};

inline const Term& Term::left() const {
    if (!node_) throw std::logic_error("Term::left on the generator");
    return node_->left;
}

inline const Term& Term::right() const {
    if (!node_) throw std::logic_error("Term::right on the generator");
    return node_->right;
}

inline int Term::magnitude() const noexcept { return node_ ? node_->magnitude : 1; }

// The preorder bit encoding of a term: one '1' per internal node, one '0' per
// leaf, root first. A term of magnitude n encodes to exactly 2n-1 bits, the
// first valid prefix closes exactly at the end, and no code is a proper
// prefix of another.
class TermCode {
public:
    static TermCode encode(const Term& t);

    // Validates the full-binary-tree property; ParseError otherwise.
    static TermCode from_string(std::string_view bits);

    Term decode() const;

    const std::string& bits() const noexcept { return bits_; }
    int magnitude() const noexcept { return static_cast<int>((bits_.size() + 1) / 2); }

    // (magnitude, lexicographic) order; within one stratum all codes have the
    // same length, so this is plain bitwise lexicographic order there.
    std::strong_ordering operator<=>(const TermCode& other) const;
    bool operator==(const TermCode& other) const { return bits_ == other.bits_; }

private:
    explicit TermCode(std::string bits) : bits_(std::move(bits)) {}
    std::string bits_;
};

// A position where the elementary rewrite applies: the path from the root to
// a subtree ((w x) (y z)) with both children internal. Empty path = root.
struct RewriteSite {
    enum class Step : std::uint8_t { left, right };
    std::vector<Step> path;

    // "LRL..." with one letter per step; the root site prints as "".
    std::string to_string() const;
    static RewriteSite parse(std::string_view text);

    friend bool operator==(const RewriteSite&, const RewriteSite&) = default;
};

// Number of terms of magnitude n: 1, 1, 2, 5, 14, 42, 132, ...
// Requires 1 <= n <= kMaxMagnitude + 1 (the largest value fitting uint64).
std::uint64_t stratum_size(int n);

// All terms of magnitude n, each exactly once, ascending in canonical code
// order. Throws BudgetError when n exceeds n_max.
std::vector<Term> enumerate_stratum(int n, int n_max = kDefaultNMax);

// All rewrite sites of t, in preorder.
std::vector<RewriteSite> rewrite_sites(const Term& t);

// Replace the subtree ((w x) (y z)) addressed by `site` with ((w y) (x z)).
// Magnitude-preserving involution; SiteError when the site does not address
// a subtree of that shape.
Term apply_rewrite(const Term& t, const RewriteSite& site);

} // namespace ncnat
