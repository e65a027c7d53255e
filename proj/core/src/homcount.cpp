#include "hlirred/homcount.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <tuple>

#include "hlirred/checked.hpp"
#include "hlirred/errors.hpp"

namespace hlirred {

std::string to_string(ImageType t) {
    switch (t) {
        case ImageType::Trivial: return "trivial";
        case ImageType::Z2: return "Z2";
        case ImageType::Z3: return "Z3";
        case ImageType::Z5: return "Z5";
        case ImageType::V4: return "V4";
        case ImageType::Full: return "full";
        case ImageType::Other: return "other";
    }
    return "?";
}

namespace {

struct CompiledLetter {
    std::uint16_t gen;
    bool use_inverse;
};

struct SearchPlan {
    int rank = 0;
    std::vector<int> order;                                  // depth -> generator
    std::vector<std::vector<std::vector<CompiledLetter>>> checks_at;  // per depth
    int last_check_depth = -1;  // depths beyond carry no relator checks
};

// Greedy earliest-completed-relator order: at each step pick the generator
// that completes the most still-open relators, tie-broken toward the
// relator closest to completion, then toward the most occurrences.
SearchPlan make_plan(const Presentation& p) {
    SearchPlan plan;
    plan.rank = int(p.gen_names.size());
    const int r = plan.rank;

    std::vector<std::vector<int>> supports;
    std::vector<const Word*> words;
    for (const auto& rel : p.relators) {
        if (rel.letters.empty()) continue;
        std::vector<int> s;
        for (const auto& l : rel.letters) s.push_back(l.gen);
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        supports.push_back(std::move(s));
        words.push_back(&rel);
    }

    std::vector<bool> assigned(r, false), done(supports.size(), false);
    std::vector<int> occurrences(r, 0);
    plan.checks_at.resize(std::max(r, 1));
    for (int step = 0; step < r; ++step) {
        for (auto& o : occurrences) o = 0;
        for (std::size_t i = 0; i < supports.size(); ++i) {
            if (done[i]) continue;
            for (const auto& l : words[i]->letters)
                if (!assigned[l.gen]) occurrences[l.gen]++;
        }
        int best = -1;
        long long best_key0 = -1, best_key1 = -1, best_key2 = -1;
        for (int u = 0; u < r; ++u) {
            if (assigned[u]) continue;
            long long completes = 0;
            long long closest = -1000;  // negated distance-to-completion
            for (std::size_t i = 0; i < supports.size(); ++i) {
                if (done[i]) continue;
                int missing = 0;
                bool contains_u = false;
                for (int gidx : supports[i]) {
                    if (gidx == u) contains_u = true;
                    else if (!assigned[gidx]) ++missing;
                }
                if (!contains_u) continue;
                if (missing == 0) ++completes;
                closest = std::max(closest, (long long)-missing);
            }
            long long key0 = completes, key1 = closest, key2 = occurrences[u];
            if (best < 0 || std::tie(key0, key1, key2) > std::tie(best_key0, best_key1, best_key2)) {
                best = u;
                best_key0 = key0;
                best_key1 = key1;
                best_key2 = key2;
            }
        }
        assigned[best] = true;
        plan.order.push_back(best);
        for (std::size_t i = 0; i < supports.size(); ++i) {
            if (done[i]) continue;
            bool complete = true;
            for (int gidx : supports[i])
                if (!assigned[gidx]) complete = false;
            if (complete) {
                done[i] = true;
                std::vector<CompiledLetter> compiled;
                compiled.reserve(words[i]->letters.size());
                for (const auto& l : words[i]->letters)
                    compiled.push_back({l.gen, l.exp < 0});
                plan.checks_at[step].push_back(std::move(compiled));
                plan.last_check_depth = step;
            }
        }
    }
    return plan;
}

struct Tables {
    const ElemIndex* mul;
    const ElemIndex* inv;
    std::size_t n;
    ElemIndex id;

    bool relator_holds(const std::vector<CompiledLetter>& rel, const ElemIndex* images) const {
        ElemIndex acc = id;
        for (const auto& l : rel) {
            ElemIndex x = images[l.gen];
            if (l.use_inverse) x = inv[x];
            acc = mul[std::size_t(acc) * n + x];
        }
        return acc == id;
    }
};

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

// Runs one worker task per first-generator image; merges results in task
// order so totals do not depend on scheduling.
template <typename Result, typename TaskFn>
std::vector<Result> run_tasks(int task_count, int jobs, TaskFn&& task) {
    std::vector<Result> results(task_count);
    jobs = std::min(resolve_jobs(jobs), task_count);
    if (jobs <= 1) {
        for (int t = 0; t < task_count; ++t) results[t] = task(t);
        return results;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < jobs; ++w)
        pool.emplace_back([&] {
            try {
                while (true) {
                    int t = next.fetch_add(1, std::memory_order_relaxed);
                    if (t >= task_count) break;
                    results[t] = task(t);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(task_count, std::memory_order_relaxed);
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return results;
}

long long count_subtree(const SearchPlan& plan, const Tables& tab,
                        const std::vector<ElemIndex>& domain,
                        const std::vector<long long>& suffix_pow, ElemIndex* images,
                        int depth) {
    if (depth > plan.last_check_depth) return suffix_pow[depth];
    const int gen = plan.order[depth];
    const auto& checks = plan.checks_at[depth];
    long long total = 0;
    for (ElemIndex v : domain) {
        images[gen] = v;
        bool ok = true;
        for (const auto& rel : checks)
            if (!tab.relator_holds(rel, images)) { ok = false; break; }
        if (!ok) continue;
        total += count_subtree(plan, tab, domain, suffix_pow, images, depth + 1);
    }
    return total;
}

std::vector<ElemIndex> full_domain(const FiniteGroup& g) {
    std::vector<ElemIndex> d(g.order());
    std::iota(d.begin(), d.end(), ElemIndex{0});
    return d;
}

}  // namespace

long long count_homs(const Presentation& p, const FiniteGroup& g,
                     const std::vector<ElemIndex>* restrict_to, int jobs) {
    const std::vector<ElemIndex> domain = restrict_to ? *restrict_to : full_domain(g);
    const int r = int(p.gen_names.size());
    SearchPlan plan = make_plan(p);
    if (domain.empty()) return r == 0 ? 1 : 0;
    // suffix_pow[d] = |domain|^(r-d), the count of free completions; only
    // the check-free tail is ever read, so only that much is computed
    std::vector<long long> suffix_pow(r + 1, 0);
    suffix_pow[r] = 1;
    for (int d = r - 1; d > plan.last_check_depth; --d)
        suffix_pow[d] = checked_mul(suffix_pow[d + 1], (long long)domain.size());
    if (plan.last_check_depth < 0) return suffix_pow[0];

    Tables tab{g.mul_table.data(), g.inv_table.data(), std::size_t(g.order()), g.identity};
    auto results = run_tasks<long long>(int(domain.size()), jobs, [&](int t) {
        std::vector<ElemIndex> images(r, 0);
        images[plan.order[0]] = domain[t];
        for (const auto& rel : plan.checks_at[0])
            if (!tab.relator_holds(rel, images.data())) return 0LL;
        return count_subtree(plan, tab, domain, suffix_pow, images.data(), 1);
    });
    long long total = 0;
    for (long long c : results) total = checked_add(total, c);
    return total;
}

namespace {

// Streaming orbit detection: a hom is counted iff it is the lexicographically
// smallest member of its conjugacy orbit (compared by generator index).
// Conjugating a hom elementwise always yields another hom, so every orbit is
// counted exactly once, at its minimal member, with no materialization.
struct OrbitContext {
    std::vector<ElemIndex> conj_tab;  // [t * n + x] = t x t^-1
    std::size_t n = 0;

    explicit OrbitContext(const FiniteGroup& g) : n(g.order()) {
        conj_tab.resize(n * n);
        for (std::size_t t = 0; t < n; ++t)
            for (std::size_t x = 0; x < n; ++x)
                conj_tab[t * n + x] = g.conj(ElemIndex(t), ElemIndex(x));
    }

    bool is_lex_min(const ElemIndex* images, int r) const {
        for (std::size_t t = 1; t < n; ++t) {
            const ElemIndex* row = conj_tab.data() + t * n;
            for (int j = 0; j < r; ++j) {
                ElemIndex c = row[images[j]];
                if (c < images[j]) return false;
                if (c > images[j]) break;
            }
        }
        return true;
    }
};

// Enumerates every hom (no free-suffix shortcut) and calls visit(images).
template <typename Visit>
void enumerate_subtree(const SearchPlan& plan, const Tables& tab,
                       const std::vector<ElemIndex>& domain, ElemIndex* images, int depth,
                       Visit&& visit) {
    if (depth == plan.rank) {
        visit(images);
        return;
    }
    const int gen = plan.order[depth];
    const auto& checks = plan.checks_at[depth];
    for (ElemIndex v : domain) {
        images[gen] = v;
        bool ok = true;
        for (const auto& rel : checks)
            if (!tab.relator_holds(rel, images)) { ok = false; break; }
        if (ok) enumerate_subtree(plan, tab, domain, images, depth + 1, visit);
    }
}

struct OrbitTaskResult {
    long long homs = 0;
    long long orbits = 0;
    std::vector<Hom> reps;
    std::array<long long, kImageTypeCount> homs_by_type{};
    std::array<long long, kImageTypeCount> orbits_by_type{};
    std::map<std::vector<ElemIndex>, ImageType> type_memo;  // per-task cache
};

template <typename PerHom>
std::vector<OrbitTaskResult> run_orbit_pass(const Presentation& p, const FiniteGroup& g,
                                            const HomCountOptions& opts, PerHom&& per_hom) {
    const int r = int(p.gen_names.size());
    SearchPlan plan = make_plan(p);
    const std::vector<ElemIndex> domain = full_domain(g);
    Tables tab{g.mul_table.data(), g.inv_table.data(), std::size_t(g.order()), g.identity};
    OrbitContext orbit(g);

    if (r == 0) {
        // single empty hom, trivially minimal
        std::vector<OrbitTaskResult> res(1);
        ElemIndex* none = nullptr;
        per_hom(res[0], none, true);
        res[0].homs = 1;
        res[0].orbits = 1;
        return res;
    }

    std::atomic<long long> visited{0};
    auto results = run_tasks<OrbitTaskResult>(int(domain.size()), opts.jobs, [&](int t) {
        OrbitTaskResult local;
        std::vector<ElemIndex> images(r, 0);
        images[plan.order[0]] = domain[t];
        bool ok = true;
        for (const auto& rel : plan.checks_at[0])
            if (!tab.relator_holds(rel, images.data())) ok = false;
        if (!ok) return local;
        long long since_sync = 0;
        enumerate_subtree(plan, tab, domain, images.data(), 1, [&](const ElemIndex* imgs) {
            local.homs++;
            if (++since_sync >= 1024) {
                if (visited.fetch_add(since_sync, std::memory_order_relaxed) + since_sync >
                    opts.orbit_cap)
                    throw CapExceeded("ks_orbits: hom count exceeds orbit cap " +
                                      std::to_string(opts.orbit_cap));
                since_sync = 0;
            }
            bool minimal = orbit.is_lex_min(imgs, r);
            if (minimal) local.orbits++;
            per_hom(local, imgs, minimal);
        });
        if (visited.fetch_add(since_sync, std::memory_order_relaxed) + since_sync >
            opts.orbit_cap)
            throw CapExceeded("ks_orbits: hom count exceeds orbit cap " +
                              std::to_string(opts.orbit_cap));
        return local;
    });
    return results;
}

}  // namespace

long long ks_orbits(const Presentation& p, const FiniteGroup& g, const HomCountOptions& opts,
                    std::vector<Hom>* reps) {
    const int r = int(p.gen_names.size());
    auto results = run_orbit_pass(p, g, opts,
                                  [&](OrbitTaskResult& local, const ElemIndex* imgs, bool minimal) {
                                      if (minimal && reps && imgs)
                                          local.reps.emplace_back(imgs, imgs + r);
                                  });
    long long orbits = 0;
    if (reps) reps->clear();
    for (auto& res : results) {
        orbits = checked_add(orbits, res.orbits);
        if (reps)
            for (auto& h : res.reps) reps->push_back(std::move(h));
    }
    if (reps && r == 0) reps->push_back({});
    return orbits;
}

long long ks_burnside(const Presentation& p, const FiniteGroup& g, int jobs) {
    long long sum = 0;
    for (const auto& cls : g.classes) {
        const auto& cent = g.centralizer_of[cls.front()];
        long long fixed = count_homs(p, g, &cent, jobs);
        sum = checked_add(sum, checked_mul(fixed, (long long)cls.size()));
    }
    if (sum % g.order() != 0)
        throw std::logic_error("ks_burnside: non-integer orbit average (engine bug)");
    return sum / g.order();
}

ImageType image_type(const FiniteGroup& g, const Hom& hom) {
    std::vector<ElemIndex> seed(hom.begin(), hom.end());
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    auto sub = subgroup_closure(g, std::move(seed));
    const std::size_t n = sub.size();
    if (n == 1) return ImageType::Trivial;
    if (n == std::size_t(g.order())) return ImageType::Full;
    bool abelian = true;
    for (auto a : sub) {
        for (auto b : sub)
            if (g.mul(a, b) != g.mul(b, a)) { abelian = false; break; }
        if (!abelian) break;
    }
    if (!abelian) return ImageType::Other;
    auto inv = abelian_invariants(g, sub);
    if (inv == std::vector<int>{2}) return ImageType::Z2;
    if (inv == std::vector<int>{3}) return ImageType::Z3;
    if (inv == std::vector<int>{5}) return ImageType::Z5;
    if (inv == std::vector<int>{2, 2}) return ImageType::V4;
    return ImageType::Other;
}

HomCensus classify_homs(const Presentation& p, const FiniteGroup& g,
                        const HomCountOptions& opts) {
    const int r = int(p.gen_names.size());
    // type lookup memoized on the sorted image set; tasks keep private memos
    auto results = run_orbit_pass(
        p, g, opts, [&](OrbitTaskResult& local, const ElemIndex* imgs, bool minimal) {
            ImageType t;
            if (!imgs) {
                t = ImageType::Trivial;
            } else {
                std::vector<ElemIndex> key(imgs, imgs + r);
                std::sort(key.begin(), key.end());
                key.erase(std::unique(key.begin(), key.end()), key.end());
                auto it = local.type_memo.find(key);
                if (it == local.type_memo.end())
                    it = local.type_memo.emplace(key, image_type(g, Hom(imgs, imgs + r))).first;
                t = it->second;
            }
            local.homs_by_type[std::size_t(t)]++;
            if (minimal) local.orbits_by_type[std::size_t(t)]++;
        });
    HomCensus census;
    for (const auto& res : results) {
        census.total = checked_add(census.total, res.homs);
        census.orbit_count = checked_add(census.orbit_count, res.orbits);
        for (int i = 0; i < kImageTypeCount; ++i) {
            census.homs_by_type[i] += res.homs_by_type[i];
            census.orbits_by_type[i] += res.orbits_by_type[i];
        }
    }
    return census;
}

}  // namespace hlirred
