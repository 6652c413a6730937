#include "ncnat/term.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>

#include "ncnat/bitcode.hpp"
#include "ncnat/errors.hpp"

namespace ncnat {

Term Term::node(Term left, Term right) {
    int mag = left.magnitude() + right.magnitude();
    return Term(std::make_shared<const Node>(Node{std::move(left), std::move(right), mag}));
}

std::string Term::to_string() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(magnitude()) * 4);
    // Explicit stack; entries are either a term to print or a literal char.
    struct Item {
        const Term* term;
        char lit;
    };
    std::vector<Item> stack{{this, 0}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (it.term == nullptr) {
            out.push_back(it.lit);
            continue;
        }
        if (it.term->is_leaf()) {
            out.push_back('1');
            continue;
        }
        stack.push_back({nullptr, ')'});
        stack.push_back({&it.term->right(), 0});
        stack.push_back({nullptr, ' '});
        stack.push_back({&it.term->left(), 0});
        out.push_back('(');
    }
    return out;
}

Term Term::parse(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    // One frame per open '(' holding the first child once parsed.
    std::vector<std::optional<Term>> frames;
    std::optional<Term> done;

    skip_ws();
    while (!done) {
        if (pos >= text.size()) throw ParseError("unexpected end of input, expected a term", pos);
        Term t;
        if (text[pos] == '1') {
            ++pos;
        } else if (text[pos] == '(') {
            frames.emplace_back(std::nullopt);
            ++pos;
            skip_ws();
            continue;
        } else {
            throw ParseError("expected '1' or '('", pos);
        }
        // Completed a term; reduce as far as possible.
        for (;;) {
            skip_ws();
            if (frames.empty()) {
                done = std::move(t);
                break;
            }
            auto& top = frames.back();
            if (!top) {
                top = std::move(t);
                break; // the outer loop parses the second child
            }
            if (pos >= text.size() || text[pos] != ')')
                throw ParseError("expected ')'", pos);
            ++pos;
            t = Term::node(std::move(*top), std::move(t));
            frames.pop_back();
        }
    }
    skip_ws();
    if (pos != text.size()) throw ParseError("unexpected trailing input", pos);
    return *done;
}

bool operator==(const Term& a, const Term& b) {
    std::vector<std::pair<const Term*, const Term*>> stack{{&a, &b}};
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        if (x->node_ == y->node_) continue; // shared structure or both leaves
        if (x->is_leaf() != y->is_leaf()) return false;
        if (x->is_leaf()) continue;
        if (x->magnitude() != y->magnitude()) return false;
        stack.push_back({&x->right(), &y->right()});
        stack.push_back({&x->left(), &y->left()});
    }
    return true;
}

std::strong_ordering Term::operator<=>(const Term& other) const {
    if (auto c = magnitude() <=> other.magnitude(); c != 0) return c;
    // Same magnitude: compare preorder codes, leaf (0) before internal (1).
    std::vector<std::pair<const Term*, const Term*>> stack{{this, &other}};
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        if (x->node_ == y->node_) continue;
        if (x->is_leaf() != y->is_leaf())
            return x->is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
        if (x->is_leaf()) continue;
        // Preorder: the left subtree's bits come first.
        stack.push_back({&x->right(), &y->right()});
        stack.push_back({&x->left(), &y->left()});
    }
    return std::strong_ordering::equal;
}

std::size_t Term::hash() const noexcept {
    // FNV-1a over the preorder bits.
    std::size_t h = 1469598103934665603ull;
    std::vector<const Term*> stack{this};
    while (!stack.empty()) {
        const Term* t = stack.back();
        stack.pop_back();
        h ^= t->is_leaf() ? 0x30u : 0x31u;
        h *= 1099511628211ull;
        if (!t->is_leaf()) {
            stack.push_back(&t->right());
            stack.push_back(&t->left());
        }
    }
    return h;
}

TermCode TermCode::encode(const Term& t) {
    std::string bits;
    bits.reserve(static_cast<std::size_t>(2 * t.magnitude() - 1));
    std::vector<const Term*> stack{&t};
    while (!stack.empty()) {
        const Term* cur = stack.back();
        stack.pop_back();
        if (cur->is_leaf()) {
            bits.push_back('0');
        } else {
            bits.push_back('1');
            stack.push_back(&cur->right());
            stack.push_back(&cur->left());
        }
    }
    return TermCode(std::move(bits));
}

TermCode TermCode::from_string(std::string_view bits) {
    int pending = 1;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (pending == 0) throw ParseError("bit code continues past a complete tree", i);
        char c = bits[i];
        if (c == '1') {
            pending += 1;
        } else if (c == '0') {
            pending -= 1;
        } else {
            throw ParseError("expected '0' or '1'", i);
        }
    }
    if (pending != 0) throw ParseError("truncated bit code", bits.size());
    return TermCode(std::string(bits));
}

Term TermCode::decode() const {
    // Scan bits right to left; in reversed preorder the left subtree sits on
    // top of the stack when its parent's '1' arrives.
    std::vector<Term> stack;
    for (std::size_t k = bits_.size(); k-- > 0;) {
        if (bits_[k] == '0') {
            stack.push_back(Term::leaf());
        } else {
            Term l = std::move(stack.back());
            stack.pop_back();
            Term r = std::move(stack.back());
            stack.pop_back();
            stack.push_back(Term::node(std::move(l), std::move(r)));
        }
    }
    return stack.back();
}

std::strong_ordering TermCode::operator<=>(const TermCode& other) const {
    if (auto c = bits_.size() <=> other.bits_.size(); c != 0) return c;
    return bits_.compare(other.bits_) <=> 0;
}

std::string RewriteSite::to_string() const {
    std::string out;
    out.reserve(path.size());
    for (Step s : path) out.push_back(s == Step::left ? 'L' : 'R');
    return out;
}

RewriteSite RewriteSite::parse(std::string_view text) {
    RewriteSite site;
    site.path.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == 'L') {
            site.path.push_back(Step::left);
        } else if (text[i] == 'R') {
            site.path.push_back(Step::right);
        } else {
            throw ParseError("expected 'L' or 'R'", i);
        }
    }
    return site;
}

std::uint64_t stratum_size(int n) {
    if (n < 1 || n > kMaxMagnitude + 1)
        throw std::invalid_argument("stratum_size: magnitude out of range");
    static const std::vector<std::uint64_t> table = [] {
        std::vector<std::uint64_t> s(kMaxMagnitude + 2, 0);
        s[1] = 1;
        for (int m = 2; m < static_cast<int>(s.size()); ++m)
            for (int k = 1; k < m; ++k) s[m] += s[k] * s[m - k];
        return s;
    }();
    return table[static_cast<std::size_t>(n)];
}

std::vector<Term> enumerate_stratum(int n, int n_max) {
    if (n < 1) throw std::invalid_argument("enumerate_stratum: magnitude must be >= 1");
    if (n > n_max) throw BudgetError(n, n_max);
    std::vector<bitcode::Code> codes = bitcode::enumerate_codes(n);
    std::vector<Term> out;
    out.reserve(codes.size());
    for (bitcode::Code c : codes) out.push_back(bitcode::unpack(c, n));
    return out;
}

namespace {

void collect_sites_rec(const Term& t, std::vector<RewriteSite::Step>& path,
                       std::vector<RewriteSite>& out) {
    if (t.is_leaf()) return;
    if (!t.left().is_leaf() && !t.right().is_leaf()) out.push_back(RewriteSite{path});
    path.push_back(RewriteSite::Step::left);
    collect_sites_rec(t.left(), path, out);
    path.back() = RewriteSite::Step::right;
    collect_sites_rec(t.right(), path, out);
    path.pop_back();
}

Term apply_rewrite_rec(const Term& t, const RewriteSite& site, std::size_t depth) {
    if (depth == site.path.size()) {
        if (t.is_leaf() || t.left().is_leaf() || t.right().is_leaf())
            throw SiteError("rewrite site does not address a ((w x) (y z)) subtree");
        const Term& w = t.left().left();
        const Term& x = t.left().right();
        const Term& y = t.right().left();
        const Term& z = t.right().right();
        return Term::node(Term::node(w, y), Term::node(x, z));
    }
    if (t.is_leaf()) throw SiteError("rewrite site path leaves the term");
    if (site.path[depth] == RewriteSite::Step::left)
        return Term::node(apply_rewrite_rec(t.left(), site, depth + 1), t.right());
    return Term::node(t.left(), apply_rewrite_rec(t.right(), site, depth + 1));
}

} // namespace

std::vector<RewriteSite> rewrite_sites(const Term& t) {
    std::vector<RewriteSite> out;
    std::vector<RewriteSite::Step> path;
    collect_sites_rec(t, path, out);
    return out;
}

Term apply_rewrite(const Term& t, const RewriteSite& site) {
    return apply_rewrite_rec(t, site, 0);
}

} // namespace ncnat
