#include "ncnat/bitcode.hpp"

#include <stdexcept>

#include "ncnat/errors.hpp"

namespace ncnat::bitcode {

namespace {

inline int bit_at(Code code, int len, int pos) {
    return static_cast<int>((code >> (len - 1 - pos)) & 1u);
}

// Bits [pos, pos + count) as the low `count` bits.
inline Code slice(Code code, int len, int pos, int count) {
    if (count == 0) return 0;
    return (code >> (len - pos - count)) & ((Code{1} << count) - 1);
}

} // namespace

Code pack(const Term& t) {
    if (t.magnitude() > kMaxMagnitude)
        throw std::invalid_argument("bitcode::pack: magnitude exceeds the packed representation");
    Code c = 0;
    std::vector<const Term*> stack{&t};
    while (!stack.empty()) {
        const Term* cur = stack.back();
        stack.pop_back();
        c <<= 1;
        if (!cur->is_leaf()) {
            c |= 1;
            stack.push_back(&cur->right());
            stack.push_back(&cur->left());
        }
    }
    return c;
}

Term unpack(Code code, int magnitude) {
    const int len = length(magnitude);
    // Reverse scan, same scheme as TermCode::decode.
    std::vector<Term> stack;
    for (int k = len; k-- > 0;) {
        if (bit_at(code, len, k) == 0) {
            stack.push_back(Term::leaf());
        } else {
            Term l = std::move(stack.back());
            stack.pop_back();
            Term r = std::move(stack.back());
            stack.pop_back();
            stack.push_back(Term::node(std::move(l), std::move(r)));
        }
    }
    if (stack.size() != 1) throw std::invalid_argument("bitcode::unpack: invalid code");
    return stack.back();
}

std::string to_bit_string(Code code, int magnitude) {
    const int len = length(magnitude);
    std::string out(static_cast<std::size_t>(len), '0');
    for (int i = 0; i < len; ++i)
        if (bit_at(code, len, i)) out[static_cast<std::size_t>(i)] = '1';
    return out;
}

std::vector<Code> enumerate_codes(int n) {
    if (n < 1 || n > kMaxMagnitude)
        throw std::invalid_argument("enumerate_codes: magnitude out of range");
    const int len = length(n);
    const int ones = n - 1;
    std::vector<Code> out;
    out.reserve(static_cast<std::size_t>(stratum_size(n)));

    // Depth-first over bit choices, '0' before '1', which emits codes in
    // ascending order directly. The pending-subtree count after i bits with
    // o ones is 1 + 2o - i; it must stay positive until the final bit.
    struct Frame {
        int i;
        int o;
        Code c;
    };
    std::vector<Frame> stack;
    stack.push_back({0, 0, 0});
    while (!stack.empty()) {
        auto [i, o, c] = stack.back();
        stack.pop_back();
        if (i == len) {
            out.push_back(c);
            continue;
        }
        // Push '1' first so '0' is explored first (LIFO).
        if (o < ones && i + 1 < len) stack.push_back({i + 1, o + 1, (c << 1) | 1});
        int pending = 1 + 2 * o - (i + 1);
        bool closes = (i + 1 == len) ? (pending == 0) : (pending >= 1);
        if (closes && ones - o <= len - (i + 1)) stack.push_back({i + 1, o, c << 1});
    }
    return out;
}

int subtree_length(Code code, int len, int pos) {
    int pending = 1;
    int i = pos;
    while (pending > 0) {
        pending += bit_at(code, len, i) ? 1 : -1;
        ++i;
    }
    return i - pos;
}

void collect_sites(Code code, int len, std::vector<int>& out) {
    for (int pos = 0; pos + 4 < len; ++pos) {
        if (!bit_at(code, len, pos)) continue;
        if (!bit_at(code, len, pos + 1)) continue; // left child must be internal
        int left_len = subtree_length(code, len, pos + 1);
        if (bit_at(code, len, pos + 1 + left_len)) out.push_back(pos);
    }
}

Code apply_site(Code code, int len, int pos) {
    // Layout at a site: 1 1 w x 1 y z  ->  1 1 w y 1 x z
    const int w_pos = pos + 2;
    const int w_len = subtree_length(code, len, w_pos);
    const int x_pos = w_pos + w_len;
    const int x_len = subtree_length(code, len, x_pos);
    const int r_pos = x_pos + x_len; // the right child's '1'
    const int y_pos = r_pos + 1;
    const int y_len = subtree_length(code, len, y_pos);
    const int z_pos = y_pos + y_len;
    const int z_len = subtree_length(code, len, z_pos);
    const int end = z_pos + z_len;

    Code out = 0;
    auto put = [&](Code v, int count) { out = (out << count) | v; };
    put(slice(code, len, 0, w_pos + w_len), w_pos + w_len); // prefix, both '1' markers, w
    put(slice(code, len, y_pos, y_len), y_len);
    put(1, 1);
    put(slice(code, len, x_pos, x_len), x_len);
    put(slice(code, len, z_pos, z_len), z_len);
    put(slice(code, len, end, len - end), len - end);
    return out;
}

RewriteSite site_path(Code code, int len, int pos) {
    RewriteSite site;
    int at = 0;
    while (at != pos) {
        // Descend from the node at `at` toward `pos`.
        int left_start = at + 1;
        int left_len = subtree_length(code, len, left_start);
        if (pos < left_start + left_len) {
            site.path.push_back(RewriteSite::Step::left);
            at = left_start;
        } else {
            site.path.push_back(RewriteSite::Step::right);
            at = left_start + left_len;
        }
    }
    return site;
}

} // namespace ncnat::bitcode
