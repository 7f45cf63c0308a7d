/*
 *   Copyright 2026 The shufcong Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "shufcong/congruence.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <mutex>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "integer_lattice.hpp"
#include "shufcong/errors.hpp"

namespace shufcong {

// ---------------------------------------------------------------- weights

WeightFn::WeightFn(std::vector<std::uint64_t> weights) : weights_(std::move(weights)) {
    for (auto w : weights_) {
        if (w == 0) throw UsageError("letter weights must be >= 1");
    }
}

std::uint64_t WeightFn::operator()(const Word& w) const {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < w.size(); ++i) total += weights_.at(w[i]);
    return total;
}

std::uint64_t WeightFn::min_weight() const {
    return weights_.empty() ? 1 : *std::min_element(weights_.begin(), weights_.end());
}

bool is_homogeneous(const Presentation& p, const WeightFn& w) {
    if (w.size() != p.alphabet().size()) return false;
    for (const auto& [u, v] : p.relators()) {
        if (w(u) != w(v)) return false;
    }
    return true;
}

namespace {

std::vector<detail::IntVector> relator_rows(const std::set<Relator>& relators, std::size_t dim) {
    std::vector<detail::IntVector> rows;
    for (const auto& [u, v] : relators) {
        detail::IntVector row(dim, 0);
        for (std::size_t i = 0; i < u.size(); ++i) row[u[i]] += 1;
        for (std::size_t i = 0; i < v.size(); ++i) row[v[i]] -= 1;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::optional<WeightFn> find_weight(const Presentation& p) {
    const std::size_t n = p.alphabet().size();
    if (p.relators().empty()) return WeightFn::uniform(n);
    if (is_homogeneous(p, WeightFn::uniform(n))) return WeightFn::uniform(n);

    const auto basis = detail::kernel_basis(relator_rows(p.relators(), n), n);
    if (basis.empty()) return std::nullopt;

    constexpr std::int64_t entry_limit = std::int64_t(1) << 40;
    std::vector<std::vector<std::int64_t>> small;
    for (const auto& b : basis) {
        std::vector<std::int64_t> v;
        for (const auto& x : b) {
            if (x > entry_limit || x < -entry_limit) return std::nullopt;
            v.push_back(static_cast<std::int64_t>(x));
        }
        small.push_back(std::move(v));
    }

    // exhaustive search over small integer combinations of the kernel basis
    const std::size_t k = small.size();
    std::int64_t range = 8;
    auto combos = [&](std::int64_t r) {
        double c = 1;
        for (std::size_t i = 0; i < k; ++i) c *= double(2 * r + 1);
        return c;
    };
    while (range > 1 && combos(range) > 2e6) --range;

    std::optional<std::vector<std::int64_t>> best;
    std::int64_t best_max = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> coeff(k, -range);
    std::vector<std::int64_t> x(n);
    while (true) {
        std::fill(x.begin(), x.end(), 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (coeff[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) x[j] += coeff[i] * small[i][j];
        }
        if (std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v > 0; })) {
            std::int64_t g = 0;
            for (auto v : x) g = std::gcd(g, v);
            for (auto& v : x) v /= g;
            std::int64_t mx = *std::max_element(x.begin(), x.end());
            if (mx < best_max || (mx == best_max && x < *best)) {
                best = x;
                best_max = mx;
            }
        }
        std::size_t i = 0;
        while (i < k && coeff[i] == range) coeff[i++] = -range;
        if (i == k) break;
        ++coeff[i];
    }
    if (!best) return std::nullopt;
    return WeightFn(std::vector<std::uint64_t>(best->begin(), best->end()));
}

std::vector<std::int64_t> letg_potential(std::size_t vertex_count,
                                         const std::map<std::pair<std::size_t, std::size_t>, std::int64_t>& d) {
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> adj(vertex_count);
    for (const auto& [edge, value] : d) {
        auto [a, b] = edge;
        if (a >= vertex_count || b >= vertex_count) throw UsageError("potential edge outside the vertex set");
        if (a == b && value != 0) throw CocycleViolation(a, a, a);
        if (auto rev = d.find({b, a}); rev != d.end() && rev->second != -value) throw CocycleViolation(a, b, a);
        adj[a].emplace_back(b, value);
        adj[b].emplace_back(a, -value);
    }

    std::vector<std::optional<std::int64_t>> h(vertex_count);
    std::vector<std::int64_t> out(vertex_count, 1);
    for (std::size_t root = 0; root < vertex_count; ++root) {
        if (h[root]) continue;
        h[root] = 0;
        std::vector<std::size_t> component{root};
        std::queue<std::size_t> todo;
        todo.push(root);
        while (!todo.empty()) {
            std::size_t a = todo.front();
            todo.pop();
            for (auto [b, value] : adj[a]) {
                if (!h[b]) {
                    h[b] = *h[a] + value;
                    component.push_back(b);
                    todo.push(b);
                } else if (*h[b] != *h[a] + value) {
                    throw CocycleViolation(a, b, root);
                }
            }
        }
        std::int64_t lowest = std::numeric_limits<std::int64_t>::max();
        for (auto v : component) lowest = std::min(lowest, *h[v]);
        for (auto v : component) out[v] = *h[v] - lowest + 1;
    }
    return out;
}

// ---------------------------------------------------------------- substitutions

LetterSubstitution::LetterSubstitution(std::size_t letters) : image_(letters) {
    for (std::size_t a = 0; a < letters; ++a) image_[a] = static_cast<Letter>(a);
}

Word LetterSubstitution::apply(const Word& w) const {
    Word out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (auto b = image_.at(w[i])) out.push_back(*b);
    }
    return out;
}

bool LetterSubstitution::is_identity() const {
    for (std::size_t a = 0; a < image_.size(); ++a) {
        if (image_[a] != std::optional<Letter>(static_cast<Letter>(a))) return false;
    }
    return true;
}

void LetterSubstitution::erase(Letter a) {
    for (auto& img : image_) {
        if (img == a) img.reset();
    }
}

void LetterSubstitution::merge(Letter from, Letter to) {
    for (auto& img : image_) {
        if (img == from) img = to;
    }
}

namespace {

struct StructuralReduction {
    LetterSubstitution substitution;
    std::set<Relator> residual;
};

// relators of the form a = 1 and a = b, applied until nothing changes
StructuralReduction structural_reduction(const Presentation& p) {
    LetterSubstitution s(p.alphabet().size());
    while (true) {
        bool changed = false;
        for (const auto& [u, v] : p.relators()) {
            Word a = s.apply(u), b = s.apply(v);
            if (a.size() < b.size()) std::swap(a, b);
            if (a.size() == 1 && b.empty()) {
                s.erase(a[0]);
                changed = true;
                break;
            }
        }
        if (changed) continue;
        for (const auto& [u, v] : p.relators()) {
            Word a = s.apply(u), b = s.apply(v);
            if (a.size() == 1 && b.size() == 1 && a != b) {
                s.merge(std::max(a[0], b[0]), std::min(a[0], b[0]));
                changed = true;
                break;
            }
        }
        if (!changed) break;
    }
    std::set<Relator> residual;
    for (const auto& [u, v] : p.relators()) {
        Word a = s.apply(u), b = s.apply(v);
        if (a != b) residual.insert(oriented(std::move(a), std::move(b)));
    }
    return {std::move(s), std::move(residual)};
}

detail::IntVector letter_counts(const Word& w, std::size_t dim) {
    detail::IntVector v(dim, 0);
    for (std::size_t i = 0; i < w.size(); ++i) v[w[i]] += 1;
    return v;
}

} // namespace

// ---------------------------------------------------------------- quotient context

std::size_t default_cap(const Presentation& p) { return std::max<std::size_t>(1, p.max_relator_length() * 4); }

struct QuotientContext::Cache {
    struct Class {
        std::vector<Word> members;
        Word least;
        bool closed = true;
    };

    explicit Cache(std::size_t dim) : lattice(dim) {}

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    std::mutex mutex;
    std::unordered_map<Word, std::size_t, WordHash> index;
    std::vector<std::size_t> parent;
    std::vector<Class> classes;
    detail::IntegerLattice lattice;
};

QuotientContext::QuotientContext(Presentation p, ContextOptions options)
    : presentation_(std::move(p)), options_(std::move(options)) {
    cap_ = options_.cap.value_or(default_cap(presentation_));
    auto reduction = structural_reduction(presentation_);
    substitution_ = std::move(reduction.substitution);
    residual_ = std::move(reduction.residual);

    Presentation residual_presentation(presentation_.alphabet());
    for (const auto& [u, v] : residual_) residual_presentation.add_relator(u, v);
    if (options_.weight) {
        if (!is_homogeneous(residual_presentation, *options_.weight)) {
            throw PreconditionViolated("the given weight does not make the relators homogeneous");
        }
        weight_ = options_.weight;
    } else {
        weight_ = find_weight(residual_presentation);
    }

    const std::size_t dim = presentation_.alphabet().size();
    cache_ = std::make_unique<Cache>(dim);
    for (auto& row : relator_rows(residual_, dim)) cache_->lattice.add_generator(std::move(row));
}

QuotientContext::QuotientContext(QuotientContext&&) noexcept = default;
QuotientContext& QuotientContext::operator=(QuotientContext&&) noexcept = default;
QuotientContext::~QuotientContext() = default;

QuotientContext QuotientContext::clone() const {
    ContextOptions opts = options_;
    opts.cap = cap_;
    return QuotientContext(presentation_, opts);
}

std::size_t QuotientContext::explore(const Word& start) const {
    Cache& c = *cache_;
    std::lock_guard lock(c.mutex);
    if (auto it = c.index.find(start); it != c.index.end()) return c.find(it->second);

    const std::size_t k = c.classes.size();
    c.parent.push_back(k);
    c.classes.push_back({{start}, start, true});
    c.index.emplace(start, k);

    const std::size_t cap = std::max(cap_, start.size());
    const bool bounded = !weight_.has_value();
    std::deque<Word> todo{start};

    auto visit = [&](Word next) {
        if (bounded && next.size() > cap) {
            c.classes[k].closed = false;
            return;
        }
        if (auto it = c.index.find(next); it != c.index.end()) {
            std::size_t other = c.find(it->second);
            if (other != k) {
                auto& mine = c.classes[k];
                auto& theirs = c.classes[other];
                mine.members.insert(mine.members.end(), theirs.members.begin(), theirs.members.end());
                mine.least = std::min(mine.least, theirs.least);
                mine.closed = mine.closed && theirs.closed;
                theirs.members.clear();
                theirs.members.shrink_to_fit();
                c.parent[other] = k;
            }
            return;
        }
        c.index.emplace(next, k);
        auto& mine = c.classes[k];
        if (next < mine.least) mine.least = next;
        mine.members.push_back(next);
        todo.push_back(std::move(next));
    };

    while (!todo.empty()) {
        if (c.classes[k].members.size() > options_.max_class_size) {
            c.classes[k].closed = false;
            break;
        }
        Word w = std::move(todo.front());
        todo.pop_front();
        for (const auto& [l, r] : residual_) {
            for (int dir = 0; dir < 2; ++dir) {
                const Word& from = dir == 0 ? l : r;
                const Word& to = dir == 0 ? r : l;
                if (from.empty()) {
                    for (std::size_t pos = 0; pos <= w.size(); ++pos) visit(w.replace(pos, 0, to));
                    continue;
                }
                for (std::size_t pos = w.find(from); pos != Word::npos; pos = w.find(from, pos + 1)) {
                    visit(w.replace(pos, from.size(), to));
                }
            }
        }
    }
    return k;
}

std::optional<Word> QuotientContext::try_normal_form(const Word& w) const {
    Word reduced = substitution_.apply(w);
    std::size_t id = explore(reduced);
    std::lock_guard lock(cache_->mutex);
    const auto& cls = cache_->classes[cache_->find(id)];
    if (!cls.closed) return std::nullopt;
    return cls.least;
}

Word QuotientContext::normal_form(const Word& w) const {
    auto nf = try_normal_form(w);
    if (!nf) throw Inconclusive(cap_, "class of '" + alphabet().format(w) + "' does not close");
    return *nf;
}

std::optional<bool> QuotientContext::try_equivalent(const Word& u, const Word& v) const {
    Word ru = substitution_.apply(u), rv = substitution_.apply(v);
    if (ru == rv) return true;
    explore(ru);
    explore(rv);
    std::lock_guard lock(cache_->mutex);
    Cache& c = *cache_;
    std::size_t iu = c.find(c.index.at(ru)), iv = c.find(c.index.at(rv));
    if (iu == iv) return true;
    if (c.classes[iu].closed || c.classes[iv].closed) return false;
    // letter counts modulo the relator lattice are a congruence invariant
    const std::size_t dim = alphabet().size();
    auto du = letter_counts(ru, dim), dv = letter_counts(rv, dim);
    for (std::size_t i = 0; i < dim; ++i) du[i] -= dv[i];
    if (!c.lattice.contains(std::move(du))) return false;
    return std::nullopt;
}

bool QuotientContext::equivalent(const Word& u, const Word& v) const {
    auto r = try_equivalent(u, v);
    if (!r) {
        throw Inconclusive(cap_, "cannot decide '" + alphabet().format(u) + "' = '" + alphabet().format(v) + "'");
    }
    return *r;
}

std::vector<Word> QuotientContext::class_members(const Word& w) const {
    Word reduced = substitution_.apply(w);
    std::size_t id = explore(reduced);
    std::lock_guard lock(cache_->mutex);
    const auto& cls = cache_->classes[cache_->find(id)];
    if (!cls.closed) throw Inconclusive(cap_, "class of '" + alphabet().format(w) + "' does not close");
    auto out = cls.members;
    std::sort(out.begin(), out.end());
    return out;
}

Poly QuotientContext::reduce_poly(const Poly& p) const {
    Poly out(p.semiring());
    for (const auto& [w, c] : p.terms()) out.add_term(normal_form(w), c);
    return out;
}

TensorPoly QuotientContext::reduce_tensor(const TensorPoly& t) const {
    TensorPoly out(t.semiring());
    for (const auto& [key, c] : t.terms()) out.add_term(normal_form(key.first), normal_form(key.second), c);
    return out;
}

// ---------------------------------------------------------------- derived presentations

PreNormalization pre_normalize(const Presentation& p, std::size_t cap) {
    Presentation work = p;
    ContextOptions opts;
    opts.cap = cap;
    while (true) {
        QuotientContext ctx(work, opts);
        const auto& s = ctx.substitution();
        std::vector<Letter> survivors;
        for (std::size_t a = 0; a < p.alphabet().size(); ++a) {
            if (s.image(static_cast<Letter>(a)) == std::optional<Letter>(static_cast<Letter>(a))) {
                survivors.push_back(static_cast<Letter>(a));
            }
        }

        bool found = false;
        for (Letter a : survivors) {
            auto r = ctx.try_equivalent(Word{a}, Word{});
            if (!r) throw Inconclusive(cap, "cannot settle whether " + p.alphabet().token(a) + " = 1");
            if (*r) {
                work.add_relator(Word{a}, Word{});
                found = true;
                break;
            }
        }
        for (std::size_t i = 0; !found && i < survivors.size(); ++i) {
            for (std::size_t j = i + 1; !found && j < survivors.size(); ++j) {
                Letter a = survivors[i], b = survivors[j];
                auto r = ctx.try_equivalent(Word{a}, Word{b});
                if (!r) {
                    throw Inconclusive(cap, "cannot settle whether " + p.alphabet().token(a) + " = " +
                                                p.alphabet().token(b));
                }
                if (*r) {
                    work.add_relator(Word{b}, Word{a});
                    found = true;
                }
            }
        }
        if (found) continue;

        PreNormalization out;
        out.substitution = s;
        out.residual_relators = ctx.residual_relators();
        out.survivors = survivors;
        std::map<Letter, std::vector<Letter>> blocks;
        for (std::size_t a = 0; a < p.alphabet().size(); ++a) {
            auto img = s.image(static_cast<Letter>(a));
            if (!img) {
                out.erasures.push_back(static_cast<Letter>(a));
            } else {
                blocks[*img].push_back(static_cast<Letter>(a));
            }
        }
        for (auto& [rep, block] : blocks) {
            if (block.size() >= 2) out.identifications.push_back(block);
        }

        std::vector<std::string> tokens;
        std::vector<int> reindex(p.alphabet().size(), -1);
        for (std::size_t i = 0; i < survivors.size(); ++i) {
            tokens.push_back(p.alphabet().token(survivors[i]));
            reindex[survivors[i]] = static_cast<int>(i);
        }
        auto relabel = [&](const Word& w) {
            Word r;
            for (std::size_t i = 0; i < w.size(); ++i) r.push_back(static_cast<Letter>(reindex[w[i]]));
            return r;
        };
        out.residual = Presentation(Alphabet(tokens));
        for (const auto& [u, v] : out.residual_relators) out.residual.add_relator(relabel(u), relabel(v));
        return out;
    }
}

Presentation closure_of_relators(const QuotientContext& ctx) {
    const Presentation& p = ctx.presentation();
    Presentation out = p;
    auto top = p.max_relator_element();
    if (!top) return out;

    std::map<Word, std::vector<Word>> groups;
    for (const auto& w : words_up_to(p.alphabet().size(), top->size())) {
        if (*top < w) break;
        groups[ctx.normal_form(w)].push_back(w);
    }
    for (const auto& [nf, members] : groups) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) out.add_relator(members[j], members[i]);
        }
    }
    return out;
}

JoinMeet lattice_join_meet(const Presentation& p1, const Presentation& p2, std::size_t bound,
                           const ContextOptions& options) {
    if (!(p1.alphabet() == p2.alphabet())) throw UsageError("join/meet need presentations over the same alphabet");
    Presentation join = p1;
    for (const auto& [u, v] : p2.relators()) join.add_relator(u, v);

    QuotientContext c1(p1, options), c2(p2, options);
    std::map<std::pair<Word, Word>, std::vector<Word>> groups;
    for (const auto& w : words_up_to(p1.alphabet().size(), bound)) {
        groups[{c1.normal_form(w), c2.normal_form(w)}].push_back(w);
    }
    Presentation meet(p1.alphabet());
    for (const auto& [key, members] : groups) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) meet.add_relator(members[j], members[i]);
        }
    }
    return {std::move(join), std::move(meet)};
}

Presentation restrict_bounded(const QuotientContext& ctx, const std::vector<Letter>& letters, std::size_t bound) {
    std::vector<Letter> sub = letters;
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    std::vector<std::string> tokens;
    for (Letter a : sub) {
        if (a >= ctx.alphabet().size()) throw UsageError("sub-alphabet letter outside the alphabet");
        tokens.push_back(ctx.alphabet().token(a));
    }
    Presentation out{Alphabet(tokens)};
    if (sub.empty()) return out;

    std::map<Word, std::vector<Word>> groups;
    for (const auto& local : words_up_to(sub.size(), bound)) {
        Word global;
        for (std::size_t i = 0; i < local.size(); ++i) global.push_back(sub[local[i]]);
        groups[ctx.normal_form(global)].push_back(local);
    }
    for (const auto& [nf, members] : groups) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) out.add_relator(members[j], members[i]);
        }
    }
    return out;
}

} // namespace shufcong
