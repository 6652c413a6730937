#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "ncnat/bitcode.hpp"
#include "ncnat/term.hpp"

namespace ncnat {

struct Config {
    int n_max = kDefaultNMax;
    std::filesystem::path cache_dir{}; // empty = in-memory only
};

// An equivalence class of one stratum, i.e. one element of the quotient of
// known magnitude. `rep` is the class member minimal in canonical order and
// `index` its 1-based rank among the stratum's representatives.
struct ClassId {
    int n = 1;
    std::uint32_t index = 1;
    Term rep;

    friend bool operator==(const ClassId& a, const ClassId& b) {
        return a.n == b.n && a.index == b.index;
    }
    std::strong_ordering operator<=>(const ClassId& other) const {
        if (auto c = n <=> other.n; c != 0) return c;
        return index <=> other.index;
    }
};

// One complete stratum: every term of magnitude n together with the frozen
// partition into rewrite-equivalence classes. Immutable after construction;
// safe for unlimited concurrent readers.
//
// Closing magnitude by magnitude is exhaustive: the elementary rewrite
// preserves leaf count, and compatibility of the relation with the sum
// operation amounts to applying the rewrite at arbitrary subtree positions,
// so the full relation restricted to one magnitude is exactly the connected
// components of the per-stratum rewrite graph.
class Stratum {
public:
    int magnitude() const noexcept { return n_; }
    std::size_t term_count() const noexcept { return codes_.size(); }
    std::size_t class_count() const noexcept { return reps_.size(); }

    const std::vector<bitcode::Code>& codes() const noexcept { return codes_; }

    // Canonical rank of a magnitude-n code; nullopt when absent.
    std::optional<std::size_t> index_of(bitcode::Code code) const;

    Term term_at(std::size_t term_index) const;

    // Dense class index (0-based, ordered by minimal representative).
    std::uint32_t class_index_of_term(std::size_t term_index) const {
        return class_of_[term_index];
    }
    std::size_t rep_term_index(std::size_t class_index) const { return reps_[class_index]; }
    std::size_t class_size(std::size_t class_index) const { return sizes_[class_index]; }

    ClassId class_id(std::size_t class_index) const;

private:
    friend Stratum close_stratum(int n, int n_max);
    friend class StratumCacheIO;

    int n_ = 1;
    std::vector<bitcode::Code> codes_;       // sorted ascending
    std::vector<std::uint32_t> class_of_;    // per term
    std::vector<std::uint32_t> reps_;        // per class: minimal term index
    std::vector<std::uint32_t> sizes_;       // per class
};

// Enumerate the stratum and union every term with each of its one-step
// rewrite images; the frozen partition is the full equivalence closure.
Stratum close_stratum(int n, int n_max = kDefaultNMax);

// Union-find over 0..size-1: union by size, full path compression, ties
// resolved toward the smaller index.
class UnionFind {
public:
    explicit UnionFind(std::size_t size);
    std::uint32_t find(std::uint32_t v);
    void unite(std::uint32_t a, std::uint32_t b);

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

// Owns closed strata, computing them lazily and, when a cache directory is
// configured, persisting them across processes. Thread-safe.
class StratumStore {
public:
    explicit StratumStore(Config config = {});

    const Config& config() const noexcept { return config_; }
    int n_max() const noexcept { return config_.n_max; }

    // Throws BudgetError when n > n_max.
    const Stratum& stratum(int n);

    std::size_t class_count(int n);

    // False immediately on unequal magnitudes; BudgetError above the budget.
    bool are_equal(const Term& a, const Term& b);

    ClassId class_of(const Term& t);

    // Classes of magnitude n with their sizes, ordered by representative.
    std::vector<std::pair<ClassId, std::size_t>> list_classes(int n);

private:
    Config config_;
    std::mutex mu_;
    std::map<int, std::unique_ptr<const Stratum>> strata_;
};

} // namespace ncnat
