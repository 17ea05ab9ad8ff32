#include "eaqecc/cosets.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "eaqecc/error.hpp"

namespace eaqecc {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

// n - k*x mod n
std::uint64_t reflect(std::uint64_t x, std::uint64_t k, std::uint64_t n) {
    const std::uint64_t kx = mulmod(k % n, x, n);
    return kx == 0 ? 0 : n - kx;
}

bool sorted_contains(const std::vector<std::uint64_t>& v, std::uint64_t x) {
    return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

bool CycCoset::contains(std::uint64_t x) const { return sorted_contains(elements, x); }

CycCoset cyclotomic_coset(std::uint64_t x, std::uint64_t n, std::uint64_t mult) {
    if (n == 0) throw Error(Errc::invalid_argument, "modulus must be positive");
    if (x >= n) throw Error(Errc::out_of_range, std::to_string(x) + " is not in Z_" + std::to_string(n));
    CycCoset c;
    c.modulus = n;
    c.multiplier = mult % n;
    std::uint64_t y = x;
    while (std::find(c.elements.begin(), c.elements.end(), y) == c.elements.end()) {
        c.elements.push_back(y);
        y = mulmod(y, c.multiplier, n);
    }
    std::sort(c.elements.begin(), c.elements.end());
    c.min_rep = c.elements.front();
    return c;
}

std::optional<std::size_t> CosetTable::index_of(std::uint64_t rep) const {
    auto it = std::lower_bound(reps.begin(), reps.end(), rep);
    if (it == reps.end() || *it != rep) return std::nullopt;
    return static_cast<std::size_t>(it - reps.begin());
}

std::uint64_t CosetTable::rep_of(std::uint64_t x) const {
    if (x >= modulus) throw Error(Errc::out_of_range, std::to_string(x) + " is not in Z_" + std::to_string(modulus));
    return reps[rep_index_[x]];
}

CycCoset CosetTable::coset(std::size_t index) const {
    if (index >= reps.size()) throw Error(Errc::out_of_range, "coset index out of range");
    return cyclotomic_coset(reps[index], modulus, multiplier);
}

CosetTable coset_table(std::uint64_t n, std::uint64_t mult) {
    if (n == 0) throw Error(Errc::invalid_argument, "modulus must be positive");
    if (n > (std::uint64_t{1} << 24)) throw Error(Errc::out_of_range, "modulus too large for a coset table");
    const std::uint64_t m = mult % n;
    if (n > 1 && std::gcd(m, n) != 1)
        throw Error(Errc::invalid_argument, "multiplier must be a unit modulo n");

    CosetTable table;
    table.modulus = n;
    table.multiplier = m;
    constexpr std::uint32_t unseen = ~std::uint32_t{0};
    table.rep_index_.assign(n, unseen);
    for (std::uint64_t x = 0; x < n; ++x) {
        if (table.rep_index_[x] != unseen) continue;
        const auto index = static_cast<std::uint32_t>(table.reps.size());
        std::uint32_t size = 0;
        std::uint64_t y = x;
        do {
            table.rep_index_[y] = index;
            ++size;
            y = mulmod(y, m, n);
        } while (y != x);
        table.reps.push_back(x);
        table.sizes.push_back(size);
    }
    return table;
}

CycCoset reciprocal_coset(const CycCoset& c, Metric metric, std::uint64_t qbase) {
    const std::uint64_t k = metric == Metric::euclidean ? 1 : qbase;
    return cyclotomic_coset(reflect(c.min_rep, k, c.modulus), c.modulus, c.multiplier);
}

CosetClass classify_coset(const CycCoset& c, Metric metric, std::uint64_t qbase) {
    // min over the whole reciprocal orbit, so the partner is exact for any coset size
    const CycCoset rec = reciprocal_coset(c, metric, qbase);
    if (rec.min_rep == c.min_rep) return {CosetKind::symmetric, c.min_rep};
    return {rec.min_rep > c.min_rep ? CosetKind::fr_asymmetric : CosetKind::sr_asymmetric, rec.min_rep};
}

bool DefiningSet::contains(std::uint64_t x) const { return sorted_contains(exponents, x); }

CosetContext::CosetContext(const CodeSetting& setting) : setting_(setting) {
    setting_.validate();
    table_ = std::make_shared<const CosetTable>(coset_table(setting_.n(), setting_.multiplier()));
}

std::size_t CosetContext::index_of_rep(std::uint64_t rep) const {
    if (rep >= table_->modulus)
        throw Error(Errc::out_of_range, std::to_string(rep) + " is not in Z_" + std::to_string(table_->modulus));
    if (auto i = table_->index_of(rep)) return *i;
    throw Error(Errc::invalid_argument, std::to_string(rep) + " is not a minimal representative modulo " +
                                            std::to_string(table_->modulus));
}

CosetClass CosetContext::classify(std::size_t index) const {
    const std::uint64_t n = table_->modulus;
    const std::uint64_t k = setting_.metric == Metric::euclidean ? 1 : setting_.inner_product_base();
    if (index >= table_->count()) throw Error(Errc::out_of_range, "coset index out of range");
    const std::uint64_t rep = table_->reps[index];
    const std::uint64_t partner = table_->rep_of(reflect(rep, k, n));
    if (partner == rep) return {CosetKind::symmetric, rep};
    return {partner > rep ? CosetKind::fr_asymmetric : CosetKind::sr_asymmetric, partner};
}

DefiningSet CosetContext::defining_set(std::size_t t) const {
    const CosetTable& tab = *table_;
    if (t >= tab.count())
        throw Error(Errc::out_of_range, "t out of range: t=" + std::to_string(t) + " but the last index is " +
                                            std::to_string(tab.count() - 1));
    DefiningSet ds;
    ds.setting = setting_;
    ds.table = table_;
    ds.t = t;
    for (std::size_t j = 0; j <= t; ++j) {
        const CycCoset c = tab.coset(j);
        ds.exponents.insert(ds.exponents.end(), c.elements.begin(), c.elements.end());
    }
    std::sort(ds.exponents.begin(), ds.exponents.end());
    ds.m_t = tab.reps[t];
    ds.m_next = t + 1 < tab.count() ? tab.reps[t + 1] : tab.modulus;
    return ds;
}

DefiningSet defining_set(const CodeSetting& setting, std::size_t t) { return CosetContext(setting).defining_set(t); }

std::vector<std::uint64_t> dual_defining_set(const DefiningSet& ds) {
    const std::uint64_t n = ds.table->modulus;
    const Metric metric = ds.setting.metric;
    const std::uint64_t qbase = ds.setting.inner_product_base();
    std::vector<std::uint64_t> excluded;
    for (std::size_t j = 0; j <= ds.t; ++j) {
        const CycCoset rec = reciprocal_coset(ds.table->coset(j), metric, qbase);
        excluded.insert(excluded.end(), rec.elements.begin(), rec.elements.end());
    }
    std::sort(excluded.begin(), excluded.end());
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < n; ++x)
        if (!sorted_contains(excluded, x)) out.push_back(x);
    return out;
}

RLPartition partition_rl(const DefiningSet& ds) {
    const Metric metric = ds.setting.metric;
    const std::uint64_t qbase = ds.setting.inner_product_base();
    RLPartition out;
    for (std::size_t j = 0; j <= ds.t; ++j) {
        const CycCoset c = ds.table->coset(j);
        const CycCoset rec = reciprocal_coset(c, metric, qbase);
        const bool reciprocal_inside =
            std::all_of(rec.elements.begin(), rec.elements.end(), [&](std::uint64_t x) { return ds.contains(x); });
        auto& side = (rec.min_rep != c.min_rep && !reciprocal_inside) ? out.right : out.left;
        side.insert(side.end(), c.elements.begin(), c.elements.end());
    }
    std::sort(out.right.begin(), out.right.end());
    std::sort(out.left.begin(), out.left.end());
    return out;
}

std::uint64_t c_by_cosets(const DefiningSet& ds) {
    const std::uint64_t left = partition_rl(ds).left.size();
    // with evaluation at zero I_0 pairs with the point at zero and leaves I_L
    return ds.setting.eval_at_zero ? left - 1 : left;
}

std::uint64_t subfield_dimension(const DefiningSet& ds) {
    std::uint64_t dim = 0;
    for (std::size_t j = 0; j <= ds.t; ++j) dim += ds.table->sizes[j];
    return dim;
}

std::uint64_t bch_bound(const DefiningSet& ds) { return ds.m_next + 1; }

}  // namespace eaqecc
