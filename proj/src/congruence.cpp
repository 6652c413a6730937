#include "ncnat/congruence.hpp"

#include <unistd.h>

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>

#include "ncnat/errors.hpp"

namespace ncnat {

std::optional<std::size_t> Stratum::index_of(bitcode::Code code) const {
    auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    if (it == codes_.end() || *it != code) return std::nullopt;
    return static_cast<std::size_t>(it - codes_.begin());
}

Term Stratum::term_at(std::size_t term_index) const {
    return bitcode::unpack(codes_[term_index], n_);
}

ClassId Stratum::class_id(std::size_t class_index) const {
    return ClassId{n_, static_cast<std::uint32_t>(class_index + 1),
                   term_at(reps_[class_index])};
}

UnionFind::UnionFind(std::size_t size) : parent_(size), size_(size, 1) {
    for (std::size_t i = 0; i < size; ++i) parent_[i] = static_cast<std::uint32_t>(i);
}

std::uint32_t UnionFind::find(std::uint32_t v) {
    std::uint32_t root = v;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[v] != root) {
        std::uint32_t next = parent_[v];
        parent_[v] = root;
        v = next;
    }
    return root;
}

void UnionFind::unite(std::uint32_t a, std::uint32_t b) {
    std::uint32_t ra = find(a);
    std::uint32_t rb = find(b);
    if (ra == rb) return;
    std::uint32_t root, child;
    if (size_[ra] > size_[rb]) {
        root = ra;
        child = rb;
    } else if (size_[ra] < size_[rb]) {
        root = rb;
        child = ra;
    } else {
        root = std::min(ra, rb);
        child = ra == root ? rb : ra;
    }
    parent_[child] = root;
    size_[root] += size_[child];
}

Stratum close_stratum(int n, int n_max) {
    if (n < 1) throw std::invalid_argument("close_stratum: magnitude must be >= 1");
    if (n > n_max) throw BudgetError(n, n_max);

    Stratum s;
    s.n_ = n;
    s.codes_ = bitcode::enumerate_codes(n);
    const int len = bitcode::length(n);
    const std::size_t count = s.codes_.size();

    UnionFind uf(count);
    std::vector<int> sites;
    for (std::size_t i = 0; i < count; ++i) {
        bitcode::Code c = s.codes_[i];
        sites.clear();
        bitcode::collect_sites(c, len, sites);
        for (int pos : sites) {
            bitcode::Code rewritten = bitcode::apply_site(c, len, pos);
            if (rewritten == c) continue;
            auto j = s.index_of(rewritten);
            // Every rewrite image is a magnitude-n tree, so it is present.
            uf.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(*j));
        }
    }

    // Freeze. Scanning indices in ascending (= canonical) order makes the
    // first member of each class its minimal representative, so dense class
    // indices come out ordered by representative.
    s.class_of_.assign(count, 0);
    std::vector<std::uint32_t> root_to_class(count, UINT32_MAX);
    for (std::size_t i = 0; i < count; ++i) {
        std::uint32_t root = uf.find(static_cast<std::uint32_t>(i));
        if (root_to_class[root] == UINT32_MAX) {
            root_to_class[root] = static_cast<std::uint32_t>(s.reps_.size());
            s.reps_.push_back(static_cast<std::uint32_t>(i));
            s.sizes_.push_back(0);
        }
        std::uint32_t cls = root_to_class[root];
        s.class_of_[i] = cls;
        s.sizes_[cls] += 1;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Disk cache. Layout (all integers little-endian), documented in
// docs/formats.md:
//   bytes 0..3   magic "NCN1"
//   u32          format version (1)
//   u32          magnitude n
//   u64          term count C(n)
//   u64          class count D(n)
//   u32 * C(n)   dense class index per term, in enumeration order
// ---------------------------------------------------------------------------

class StratumCacheIO {
public:
    static std::filesystem::path file_for(const std::filesystem::path& dir, int n) {
        return dir / ("stratum-v1-n" + std::to_string(n) + ".ncn");
    }

    static std::optional<Stratum> load(const std::filesystem::path& dir, int n) {
        std::ifstream in(file_for(dir, n), std::ios::binary);
        if (!in) return std::nullopt;
        char magic[4];
        if (!in.read(magic, 4) || std::memcmp(magic, "NCN1", 4) != 0) return std::nullopt;
        std::uint32_t version = read_u32(in);
        std::uint32_t file_n = read_u32(in);
        std::uint64_t term_count = read_u64(in);
        std::uint64_t class_count = read_u64(in);
        if (!in || version != 1 || file_n != static_cast<std::uint32_t>(n)) return std::nullopt;
        if (term_count != stratum_size(n) || class_count > term_count) return std::nullopt;

        Stratum s;
        s.n_ = n;
        s.codes_ = bitcode::enumerate_codes(n);
        s.class_of_.resize(term_count);
        in.read(reinterpret_cast<char*>(s.class_of_.data()),
                static_cast<std::streamsize>(term_count * sizeof(std::uint32_t)));
        if (!in || in.peek() != EOF) return std::nullopt;
        if constexpr (std::endian::native == std::endian::big) {
            for (auto& v : s.class_of_) v = __builtin_bswap32(v);
        }

        // Rebuild representatives and sizes; the dense index of a class must
        // equal the first-occurrence order, which pins the canonical layout.
        s.sizes_.assign(class_count, 0);
        for (std::size_t i = 0; i < s.class_of_.size(); ++i) {
            std::uint32_t cls = s.class_of_[i];
            if (cls >= class_count) return std::nullopt;
            if (s.sizes_[cls] == 0) {
                if (cls != s.reps_.size()) return std::nullopt;
                s.reps_.push_back(static_cast<std::uint32_t>(i));
            }
            s.sizes_[cls] += 1;
        }
        if (s.reps_.size() != class_count) return std::nullopt;
        return s;
    }

    static void save(const std::filesystem::path& dir, const Stratum& s) {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) return;
        auto final_path = file_for(dir, s.magnitude());
        auto tmp_path = final_path;
        tmp_path += ".tmp." + std::to_string(::getpid());
        {
            std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
            if (!out) return;
            out.write("NCN1", 4);
            write_u32(out, 1);
            write_u32(out, static_cast<std::uint32_t>(s.magnitude()));
            write_u64(out, s.term_count());
            write_u64(out, s.class_count());
            if constexpr (std::endian::native == std::endian::big) {
                for (std::uint32_t v : s.class_of_) write_u32(out, v);
            } else {
                out.write(reinterpret_cast<const char*>(s.class_of_.data()),
                          static_cast<std::streamsize>(s.class_of_.size() * sizeof(std::uint32_t)));
            }
            if (!out) return;
        }
        // Atomic publish; a concurrent writer produces the same bytes.
        std::filesystem::rename(tmp_path, final_path, ec);
        if (ec) std::filesystem::remove(tmp_path, ec);
    }

private:
    static std::uint32_t read_u32(std::istream& in) {
        unsigned char b[4] = {};
        in.read(reinterpret_cast<char*>(b), 4);
        return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
               (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
    }
    static std::uint64_t read_u64(std::istream& in) {
        std::uint64_t lo = read_u32(in);
        std::uint64_t hi = read_u32(in);
        return lo | (hi << 32);
    }
    static void write_u32(std::ostream& out, std::uint32_t v) {
        unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                              static_cast<unsigned char>(v >> 16),
                              static_cast<unsigned char>(v >> 24)};
        out.write(reinterpret_cast<const char*>(b), 4);
    }
    static void write_u64(std::ostream& out, std::uint64_t v) {
        write_u32(out, static_cast<std::uint32_t>(v));
        write_u32(out, static_cast<std::uint32_t>(v >> 32));
    }
};

StratumStore::StratumStore(Config config) : config_(std::move(config)) {
    if (config_.n_max < 1) throw std::invalid_argument("StratumStore: n_max must be >= 1");
    if (config_.n_max > kMaxMagnitude)
        throw std::invalid_argument("StratumStore: n_max exceeds the representable maximum of " +
                                    std::to_string(kMaxMagnitude));
}

const Stratum& StratumStore::stratum(int n) {
    if (n < 1) throw std::invalid_argument("StratumStore::stratum: magnitude must be >= 1");
    if (n > config_.n_max) throw BudgetError(n, config_.n_max);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = strata_.find(n);
    if (it != strata_.end()) return *it->second;

    std::optional<Stratum> s;
    if (!config_.cache_dir.empty()) s = StratumCacheIO::load(config_.cache_dir, n);
    if (!s) {
        s = close_stratum(n, config_.n_max);
        if (!config_.cache_dir.empty()) StratumCacheIO::save(config_.cache_dir, *s);
    }
    auto owned = std::make_unique<const Stratum>(std::move(*s));
    const Stratum& ref = *owned;
    strata_.emplace(n, std::move(owned));
    return ref;
}

std::size_t StratumStore::class_count(int n) { return stratum(n).class_count(); }

bool StratumStore::are_equal(const Term& a, const Term& b) {
    if (a.magnitude() != b.magnitude()) return false;
    const Stratum& s = stratum(a.magnitude());
    auto ia = s.index_of(bitcode::pack(a));
    auto ib = s.index_of(bitcode::pack(b));
    return s.class_index_of_term(*ia) == s.class_index_of_term(*ib);
}

ClassId StratumStore::class_of(const Term& t) {
    const Stratum& s = stratum(t.magnitude());
    auto i = s.index_of(bitcode::pack(t));
    return s.class_id(s.class_index_of_term(*i));
}

std::vector<std::pair<ClassId, std::size_t>> StratumStore::list_classes(int n) {
    const Stratum& s = stratum(n);
    std::vector<std::pair<ClassId, std::size_t>> out;
    out.reserve(s.class_count());
    for (std::size_t c = 0; c < s.class_count(); ++c)
        out.emplace_back(s.class_id(c), s.class_size(c));
    return out;
}

} // namespace ncnat
