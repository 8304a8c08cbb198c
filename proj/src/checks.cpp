#include "kmu/checks.hpp"

#include <atomic>
#include <cctype>
#include <chrono>
#include <functional>
#include <thread>

#include "kmu/catalog.hpp"
#include "kmu/linalg.hpp"
#include "kmu/parser.hpp"
#include "kmu/singularity.hpp"
#include "kmu/unprojection.hpp"

namespace kmu {

namespace {

using Clock = std::chrono::steady_clock;

struct Context {
    RunConfig config;
    Field field;
    Catalog catalog;

    struct Job {
        std::string id;
        std::string title;
        double limit = 0;
        std::function<void(CheckResult&)> body;
    };
    std::vector<Job> jobs;

    // queue a check; execution happens in execute() so the battery can run
    // on a worker pool with results assembled in id order
    void run(const std::string& id, const std::string& title, double limit,
             std::function<void(CheckResult&)> body) {
        bool id_match = id.rfind(config.only, 0) == 0 &&
                        (id.size() == config.only.size() ||
                         !(std::isdigit(static_cast<unsigned char>(id[config.only.size()])) &&
                           std::isdigit(static_cast<unsigned char>(config.only.back()))));
        if (!config.only.empty() && !id_match && title.find(config.only) == std::string::npos) return;
        jobs.push_back(Job{id, title, limit, std::move(body)});
    }

    CheckResult run_one(const Job& job) const {
        CheckResult r;
        r.id = job.id;
        r.title = job.title;
        r.limit_seconds = job.limit;
        auto t0 = Clock::now();
        try {
            job.body(r);
        } catch (const BudgetExceededError& e) {
            r.status = CheckResult::Status::inconclusive;
            r.detail = std::string("budget exceeded: ") + e.what();
        } catch (const Error& e) {
            if (config.prime != 101) {
                r.status = CheckResult::Status::inconclusive;
                r.detail = std::string("inconclusive-at-prime ") + std::to_string(config.prime) + ": " +
                           e.what();
            } else {
                r.status = CheckResult::Status::fail;
                r.detail = e.what();
            }
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (r.status == CheckResult::Status::pass && r.limit_seconds > 0 &&
            r.seconds > r.limit_seconds) {
            r.status = CheckResult::Status::fail;
            r.detail += (r.detail.empty() ? "" : "; ") + std::string("time limit exceeded");
        }
        return r;
    }

    std::vector<CheckResult> execute() const {
        std::vector<CheckResult> results(jobs.size());
        int n = std::max(1, config.jobs);
        if (n == 1) {
            for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = run_one(jobs[i]);
            return results;
        }
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                results[i] = run_one(jobs[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int k = 0; k < n; ++k) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        return results;
    }

    void fail(CheckResult& r, const std::string& why) const {
        r.status = CheckResult::Status::fail;
        if (config.prime != 101) {
            r.status = CheckResult::Status::inconclusive;
            r.detail += (r.detail.empty() ? "" : "; ") + ("inconclusive-at-prime: " + why);
        } else {
            r.detail += (r.detail.empty() ? "" : "; ") + why;
        }
    }

    std::vector<Polynomial> forms(const RingPtr& ring, const std::vector<long long>& degs, Rng rng,
                                  const std::string& label) const {
        std::vector<Polynomial> out;
        for (std::size_t i = 0; i < degs.size(); ++i)
            out.push_back(random_form(ring, degs[i], rng.split(label + std::to_string(i))).poly);
        return out;
    }
};

// independent oracles kept local to the acceptance code ------------------------

Polynomial oracle_det(const std::vector<std::vector<Polynomial>>& m, std::vector<int> rows,
                      std::vector<int> cols, const RingPtr& ring) {
    if (rows.empty()) return Polynomial::constant(ring, 1);
    Polynomial acc = Polynomial::zero(ring);
    std::vector<int> r2(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (m[rows[0]][cols[k]].is_zero()) continue;
        std::vector<int> c2;
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != k) c2.push_back(cols[t]);
        Polynomial sub = oracle_det(m, r2, c2, ring);
        if (k % 2)
            acc -= m[rows[0]][cols[k]] * sub;
        else
            acc += m[rows[0]][cols[k]] * sub;
    }
    return acc;
}

// textbook 4x4 Pfaffian: m01 m23 - m02 m13 + m03 m12
Polynomial oracle_pf4(const AntisymmetricMatrix& m, std::array<std::size_t, 4> ix) {
    return m.at(ix[0], ix[1]) * m.at(ix[2], ix[3]) - m.at(ix[0], ix[2]) * m.at(ix[1], ix[3]) +
           m.at(ix[0], ix[3]) * m.at(ix[1], ix[2]);
}

bool eq_up_to_sign(const Polynomial& a, const Polynomial& b) { return a == b || a == -b; }

// ------------------------------------------------------------------------------

void check_pfaffian_identity(Context& ctx) {
    ctx.run("A1", "Pfaffian identity (km 5x5 and the extension at n=3, n=5)", 0, [&ctx](CheckResult& r) {
        int seeds_done = 0;
        double worst = 0;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            auto t0 = Clock::now();
            // km matrix with example-6 degrees in P(1^5,2)
            auto ring = GradedRing::weighted({1, 1, 1, 1, 1, 2}, ctx.field);
            Rng rng(ctx.config.seed + seed);
            auto q = ctx.forms(ring, {2, 2, 2}, rng, "q");
            auto a = ctx.forms(ring, {1, 1, 1}, rng, "a");
            auto b = ctx.forms(ring, {2, 2, 2}, rng, "b");
            auto km = unproject_codim3(q, a, b);
            const RingPtr& ext = km.ring;
            auto t = Polynomial::variable(ext, km.unproj_var);
            // expected generators straight from the inputs: sums and the
            // t q_i - 2x2 borders (no Pfaffian code on this side)
            Polynomial h1 = Polynomial::zero(ext), h2 = Polynomial::zero(ext);
            std::vector<Polynomial> ql, al, bl;
            for (int i = 0; i < 3; ++i) {
                ql.push_back(q[i].lift(ext));
                al.push_back(a[i].lift(ext));
                bl.push_back(b[i].lift(ext));
                h1 += al[i] * ql[i];
                h2 += bl[i] * ql[i];
            }
            const auto& g = km.y_generators;
            if (!eq_up_to_sign(g[0], h2)) ctx.fail(r, "km: sum b_i q_i mismatch");
            if (!eq_up_to_sign(g[1], h1)) ctx.fail(r, "km: sum a_i q_i mismatch");
            std::array<std::array<int, 2>, 3> cyc = {{{1, 2}, {2, 0}, {0, 1}}};
            for (int i = 0; i < 3; ++i) {
                Polynomial want = t * ql[i] - (al[cyc[i][0]] * bl[cyc[i][1]] - al[cyc[i][1]] * bl[cyc[i][0]]);
                if (!eq_up_to_sign(g[2 + i], want)) ctx.fail(r, "km: t q_i - border minor mismatch");
            }

            // extension at n=3 coincides with the km matrix generators
            AntisymmetricMatrix cross(ring, {2, 2, 2});
            cross.set(0, 1, q[2]);
            cross.set(0, 2, -q[1]);
            cross.set(1, 2, q[0]);
            auto ex3 = unproject_pfaffian_extension(cross, a, b);
            for (std::size_t i = 0; i < 5; ++i)
                if (!eq_up_to_sign(ex3.y_generators[i], km.y_generators[i]))
                    ctx.fail(r, "extension at n=3 differs from the km matrix");

            // extension at n=5: all-linear instance in P^5; expected side
            // built with textbook 4x4 Pfaffians and single-entry 2x2 ones
            auto ring5 = GradedRing::projective(6, ctx.field);
            auto M = AntisymmetricMatrix::generic(ring5, {1, 1, 1, 1, 1}, rng.split("M"));
            auto a5 = ctx.forms(ring5, {1, 1, 1, 1, 1}, rng, "a5");
            auto b5 = ctx.forms(ring5, {1, 1, 1, 1, 1}, rng, "b5");
            auto ex5 = unproject_pfaffian_extension(M, a5, b5);
            const RingPtr& ext5 = ex5.ring;
            auto t5 = Polynomial::variable(ext5, ex5.unproj_var);
            std::vector<Polynomial> f(5, Polynomial::zero(ring5));
            for (std::size_t i = 0; i < 5; ++i) {
                std::array<std::size_t, 4> keep{};
                int k = 0;
                for (std::size_t m2 = 0; m2 < 5; ++m2)
                    if (m2 != i) keep[k++] = m2;
                Polynomial pf = oracle_pf4(M, keep);
                f[i] = (i % 2) ? -pf : pf;
            }
            Polynomial h1e = Polynomial::zero(ext5), h2e = Polynomial::zero(ext5);
            for (std::size_t i = 0; i < 5; ++i) {
                h1e += a5[i].lift(ext5) * f[i].lift(ext5);
                h2e += b5[i].lift(ext5) * f[i].lift(ext5);
            }
            if (!eq_up_to_sign(ex5.y_generators[0], h2e)) ctx.fail(r, "n=5: sum b_i f_i mismatch");
            if (!eq_up_to_sign(ex5.y_generators[1], h1e)) ctx.fail(r, "n=5: sum a_i f_i mismatch");
            for (std::size_t i = 0; i < 5; ++i) {
                Polynomial want = t5 * f[i].lift(ext5);
                for (std::size_t j = 0; j < 5; ++j) {
                    if (j == i) continue;
                    for (std::size_t k = j + 1; k < 5; ++k) {
                        if (k == i) continue;
                        int perm = (i < j) ? +1 : (i < k ? -1 : +1);
                        int sub = ((i + j + k) % 2) ? +1 : -1;
                        std::size_t u = 15, v = 15;
                        for (std::size_t m2 = 0; m2 < 5; ++m2) {
                            if (m2 == i || m2 == j || m2 == k) continue;
                            if (u == 15)
                                u = m2;
                            else
                                v = m2;
                        }
                        Polynomial minor =
                            a5[j].lift(ext5) * b5[k].lift(ext5) - a5[k].lift(ext5) * b5[j].lift(ext5);
                        Polynomial pf2 = M.at(u, v).lift(ext5);  // 2x2 Pfaffian = the entry
                        if (perm * sub > 0)
                            want -= minor * pf2;
                        else
                            want += minor * pf2;
                    }
                }
                if (!eq_up_to_sign(ex5.y_generators[2 + i], want)) ctx.fail(r, "n=5: t f_i term mismatch");
            }
            ++seeds_done;
            worst = std::max(worst, std::chrono::duration<double>(Clock::now() - t0).count());
        }
        if (worst > 1.0) ctx.fail(r, "per-seed time bound (1 s) exceeded");
        if (r.status == CheckResult::Status::pass)
            r.detail = "exact at " + std::to_string(seeds_done) + " seeds";
    });
}

void check_codim2_identity(Context& ctx) {
    ctx.run("A2", "codim-2 identity q2 g1 - q1 g2 = q1 a1 + q2 a2 on all 21 rows", 0,
            [&ctx](CheckResult& r) {
                double worst = 0;
                int rows = 0;
                for (const auto& row : ctx.catalog.codim2()) {
                    auto t0 = Clock::now();
                    AmbientSpace amb = row.T;
                    amb.field = ctx.field;
                    VarietySpec X{"X", amb, Presentation::complete_intersection(row.X)};
                    VarietySpec D{"D", amb, Presentation::complete_intersection(row.D)};
                    for (std::uint64_t s = 0; s < 3; ++s) {
                        auto res = unproject_pair(X, D, ctx.config.seed + s, "codim2");
                        if (!codim2_identity_defect(res).is_zero())
                            ctx.fail(r, "identity fails on row " + std::to_string(row.id));
                        for (const auto& g : res.y_generators)
                            if (!g.is_homogeneous())
                                ctx.fail(r, "inhomogeneous generator on row " + std::to_string(row.id));
                    }
                    ++rows;
                    worst = std::max(worst, std::chrono::duration<double>(Clock::now() - t0).count() / 3);
                }
                if (worst > 1.0) ctx.fail(r, "per-instance time bound (1 s) exceeded");
                if (r.status == CheckResult::Status::pass)
                    r.detail = "exact on " + std::to_string(rows) + " rows x 3 seeds";
            });
}

// shared by the three A3 round trips; everything passed by value so the
// queued closures own their state
void roundtrip_codim2(const Context& ctx, CheckResult& r, const std::vector<long long>& dq,
                      const char* what) {
    GroebnerOptions opts{ctx.config.budget};
    auto ring = GradedRing::projective(5, ctx.field);
    Rng rng(ctx.config.seed);
    auto q = ctx.forms(ring, dq, rng, "q");
    auto a = ctx.forms(ring, {5 - dq[1], 5 - dq[0]}, rng, "a");  // deg a_i = 5 - d_i
    auto res = unproject_codim2(q[0], q[1], a[1], a[0]);
    Ideal Y = res.y_ideal();
    Ideal E = eliminate(Y, {static_cast<int>(res.unproj_var)}, opts);
    std::vector<Polynomial> down;
    for (const auto& g : E.generators()) down.push_back(g.drop_to(ring));
    Ideal Edown(ring, down);
    Polynomial Xpoly = q[0] * a[1] + q[1] * a[0];
    Ideal X(ring, {Xpoly});
    if (!contains(Edown, X, opts)) ctx.fail(r, std::string(what) + ": X not in the eliminated ideal");
    Ideal sat = saturate(Edown, res.exceptional, opts);
    if (!ideal_equal(sat, X, opts)) ctx.fail(r, std::string(what) + ": saturation does not recover X");
}

void check_elimination(Context& ctx) {
    ctx.run("A3a", "elimination round trip: quintic containing a plane", 60, [&ctx](CheckResult& r) {
        roundtrip_codim2(ctx, r, {1, 1}, "quintic/plane");
        if (r.status == CheckResult::Status::pass) r.detail = "saturated elimination equals <X>";
    });
    ctx.run("A3b", "elimination round trip: quintic with D = V(3,1)", 60, [&ctx](CheckResult& r) {
        roundtrip_codim2(ctx, r, {3, 1}, "D_{3,1}");
        if (r.status == CheckResult::Status::pass) r.detail = "saturated elimination equals <X>";
    });
    ctx.run("A3c", "elimination round trip: example 6 Pfaffians", 60, [&ctx](CheckResult& r) {
        GroebnerOptions opts{ctx.config.budget};
        auto ring = GradedRing::weighted({1, 1, 1, 1, 1, 2}, ctx.field);
        Rng rng(ctx.config.seed);
        auto q = ctx.forms(ring, {2, 2, 2}, rng, "q");
        auto a = ctx.forms(ring, {1, 1, 1}, rng, "a");
        auto b = ctx.forms(ring, {2, 2, 2}, rng, "b");
        auto res = unproject_codim3(q, a, b);
        Ideal Y = res.y_ideal();
        Ideal E = eliminate(Y, {static_cast<int>(res.unproj_var)}, opts);
        std::vector<Polynomial> down;
        for (const auto& g : E.generators()) down.push_back(g.drop_to(ring));
        Ideal Edown(ring, down);
        Ideal X(ring, {res.y_generators[1].drop_to(ring), res.y_generators[0].drop_to(ring)});
        if (!contains(Edown, X, opts)) ctx.fail(r, "X not inside the eliminated ideal");
        Ideal sat = saturate(Edown, res.exceptional, opts);
        if (!ideal_equal(sat, X, opts)) ctx.fail(r, "saturation does not recover <h1,h2>");
        if (r.status == CheckResult::Status::pass) r.detail = "saturated elimination equals <h1,h2>";
    });
}

void check_node_counts(Context& ctx) {
    ctx.run("A4a", "16 nodes: quintic containing a plane, 3 seeds", 0, [&ctx](CheckResult& r) {
        GroebnerOptions opts{std::max(ctx.config.budget, 2'000'000LL)};
        long long bezout = node_count_bezout({1, 1, 4, 4}, {1, 1, 1, 1, 1});
        if (bezout != 16) ctx.fail(r, "Bezout oracle is not 16");
        double worst = 0;
        for (std::uint64_t s = 1; s <= 3; ++s) {
            auto t0 = Clock::now();
            auto ring = GradedRing::projective(5, ctx.field);
            Rng rng(ctx.config.seed + s);
            auto q = ctx.forms(ring, {1, 1}, rng, "q");
            auto x = generic_containing(q, {5}, rng.split("X"));
            Ideal X(ring, x);
            auto sing = singular_scheme(X, 1, opts);
            auto dd = projective_dimension_and_degree(sing, opts);
            if (dd.dimension != 0 || !dd.degree || *dd.degree != 16)
                ctx.fail(r, "seed " + std::to_string(s) + ": singular scheme is not 16 points");
            worst = std::max(worst, std::chrono::duration<double>(Clock::now() - t0).count());
        }
        if (worst > 60) ctx.fail(r, "per-seed time bound (60 s) exceeded");
        if (r.status == CheckResult::Status::pass) r.detail = "degree 16 at 3 seeds, Bezout agrees";
    });
    ctx.run("A4b", "28 nodes: X_{3,4} in P(1^5,2) containing D_{2,2,2}, 3 seeds", 0,
            [&ctx](CheckResult& r) {
                GroebnerOptions opts{std::max(ctx.config.budget, 2'000'000LL)};
                double worst = 0;
                for (std::uint64_t s = 1; s <= 3; ++s) {
                    auto t0 = Clock::now();
                    auto ring = GradedRing::weighted({1, 1, 1, 1, 1, 2}, ctx.field);
                    Rng rng(ctx.config.seed + s);
                    std::vector<Polynomial> q;
                    for (int i = 0; i < 3; ++i)
                        q.push_back(random_form(ring, 2, rng.split("q" + std::to_string(i))).poly);
                    auto x = generic_containing(q, {3, 4}, rng.split("X"));
                    Ideal X(ring, x);
                    auto sing = singular_scheme(X, 2, opts);
                    auto dd = projective_dimension_and_degree(sing, opts);
                    if (dd.dimension != 0 || !dd.degree || *dd.degree != 28)
                        ctx.fail(r, "seed " + std::to_string(s) + ": singular scheme is not 28 points");
                    worst = std::max(worst, std::chrono::duration<double>(Clock::now() - t0).count());
                }
                if (worst > 60) ctx.fail(r, "per-seed time bound (60 s) exceeded");
                if (r.status == CheckResult::Status::pass) r.detail = "degree 28 at 3 seeds";
            });
}

void check_ci_invariants(Context& ctx) {
    ctx.run("A5", "invariants: Chern series of the four cascade complete intersections", 1,
            [&ctx](CheckResult& r) {
                struct Row {
                    std::vector<int> w;
                    std::vector<long long> d;
                    long long h3, chi, c2h;
                    int h0;
                };
                std::vector<Row> rows = {{{1, 1, 1, 1, 1, 3}, {2, 6}, 4, -256, 52, 5},
                                         {{1, 1, 1, 1, 1, 1}, {2, 4}, 8, -176, 56, 6},
                                         {{1, 1, 1, 1, 1, 1, 1}, {2, 2, 3}, 12, -144, 60, 7},
                                         {{1, 1, 1, 1, 1, 1, 1, 1}, {2, 2, 2, 2}, 16, -128, 64, 8}};
                Field Q = Field::rationals();
                for (const auto& row : rows) {
                    auto inv = ci_invariants(row.w, row.d);
                    if (!(inv.h3 == Scalar::of_int(row.h3, Q)) || !inv.c2h ||
                        !(*inv.c2h == Scalar::of_int(row.c2h, Q)) || !inv.chi || *inv.chi != row.chi ||
                        inv.h0 != row.h0)
                        ctx.fail(r, "row with H^3 = " + std::to_string(row.h3) + " mismatched");
                }
                if (r.status == CheckResult::Status::pass) r.detail = "all four rows exact";
            });
}

void check_lemma_invariants(Context& ctx) {
    ctx.run("A6", "invariants: transition arithmetic on the worked examples and the cascade", 1, [&ctx](CheckResult& r) {
        Field Q = Field::rationals();
        auto x34 = ci_invariants({1, 1, 1, 1, 1, 2}, {3, 4});
        if (!(x34.h3 == Scalar::of_int(6, Q)) || !(*x34.c2h == Scalar::of_int(48, Q)) || x34.h0 != 5)
            ctx.fail(r, "derived source (6,48,5) mismatched");
        auto y6 = transition_invariants(x34, 4, TransitionDirection::unproject);
        if (!(y6.h3 == Scalar::of_int(10, Q)) || !(*y6.c2h == Scalar::of_int(52, Q)) || y6.h0 != 6)
            ctx.fail(r, "example-6 target (10,52,6) mismatched");

        auto x44 = ci_invariants({1, 1, 1, 1, 2, 2}, {4, 4});
        if (!(x44.h3 == Scalar::of_int(4, Q)) || !(*x44.c2h == Scalar::of_int(40, Q)))
            ctx.fail(r, "derived source (4,40) mismatched");
        auto y7 = transition_invariants(x44, 3, TransitionDirection::unproject);
        if (!(y7.h3 == Scalar::of_int(7, Q)) || !(*y7.c2h == Scalar::of_int(46, Q)))
            ctx.fail(r, "example-7 target (7,46) mismatched");
        // the printed dim|H| = 5 stays a recorded discrepancy, not a pass/fail
        const FamilyRecord* ex7 = ctx.catalog.family("WPf(1,2,3) in P(1^5,2^2)");
        bool annotated = false;
        if (ex7)
            for (const auto& a : ex7->annotations)
                if (a.find("discrepancy") != std::string::npos) annotated = true;
        if (!annotated) ctx.fail(r, "example-7 dim|H| discrepancy annotation missing");

        auto start = ci_invariants({1, 1, 1, 1, 1, 3}, {2, 6});
        auto seq = cascade(start, 4, 8);
        const auto& rows = ctx.catalog.cascade();
        if (seq.size() != rows.size()) ctx.fail(r, "cascade length mismatch");
        for (std::size_t i = 0; i < rows.size() && i < seq.size(); ++i) {
            if (!(seq[i].h3 == rows[i].invariants.h3) || seq[i].h0 != rows[i].invariants.h0 ||
                !(seq[i].c2h && rows[i].invariants.c2h && *seq[i].c2h == *rows[i].invariants.c2h))
                ctx.fail(r, "cascade row " + std::to_string(i + 1) + " not generated from row 1");
        }
        if (r.status == CheckResult::Status::pass)
            r.detail = "examples 6 and 7 and all nine cascade rows exact";
    });
}

void check_smoothness(Context& ctx) {
    ctx.run("A7a", "generic example-6 Pfaffian Y in P(1^6,2) is quasi-smooth, 3 seeds", 360,
            [&ctx](CheckResult& r) {
                GroebnerOptions opts{std::max(ctx.config.budget, 5'000'000LL)};
                VarietySpec wpf{"WPf(1,2)", AmbientSpace{{1, 1, 1, 1, 1, 1, 2}, ctx.field, {}},
                                Presentation::pfaffian({0, 2, 2, 2, 2})};
                double worst = 0;
                for (std::uint64_t s = 1; s <= 3; ++s) {
                    auto t0 = Clock::now();
                    auto rep = quasi_smooth(wpf, ctx.config.seed + s, opts);
                    if (!rep.is_smooth())
                        ctx.fail(r, "seed " + std::to_string(s) + " reports " + rep.verdict_name());
                    worst = std::max(worst, std::chrono::duration<double>(Clock::now() - t0).count());
                }
                if (worst > 120) ctx.fail(r, "per-seed time bound (120 s) exceeded");
                if (r.status == CheckResult::Status::pass) r.detail = "smooth at 3 seeds";
            });

    ctx.run("A7b", "Y_6 cap Pf in P(1^6,2,3) is singular at 20/20 seeds", 2400, [&ctx](CheckResult& r) {
        GroebnerOptions opts{std::max(ctx.config.budget, 5'000'000LL)};
        VarietySpec spec{"Y_6 cap Pf",
                         AmbientSpace{{1, 1, 1, 1, 1, 1, 2, 3}, ctx.field, {Constraint::hypersurface(6)}},
                         Presentation::pfaffian({1, 1, 1, 1, 1})};
        int singular = 0, trials = 20;
        double worst = 0;
        for (int s = 1; s <= trials; ++s) {
            auto t0 = Clock::now();
            auto rep = quasi_smooth(spec, ctx.config.seed + s, opts);
            if (!rep.is_smooth()) ++singular;
            worst = std::max(worst, std::chrono::duration<double>(Clock::now() - t0).count());
        }
        if (singular != trials)
            ctx.fail(r, "singular in " + std::to_string(singular) + "/" + std::to_string(trials) +
                            " trials only");
        if (worst > 120) ctx.fail(r, "per-seed time bound (120 s) exceeded");
        if (r.status == CheckResult::Status::pass)
            r.detail = "singular in " + std::to_string(singular) + "/" + std::to_string(trials) + " trials";
    });
}

void check_betti(Context& ctx) {
    ctx.run("A8", "double linkage reproduces the printed Betti diagram from both models", 1,
            [&ctx](CheckResult& r) {
                const std::vector<std::vector<long long>> printed = {{1, 0, 0, 0, 0},
                                                                     {0, 2, 0, 0, 0},
                                                                     {0, 8, 18, 8, 0},
                                                                     {0, 0, 0, 2, 0},
                                                                     {0, 0, 0, 0, 1}};
                auto via = [&](DelPezzo6Model m) {
                    return link_betti(link_betti(delpezzo6_betti(m), {2, 2, 3, 2}, 4), {2, 2, 3, 3}, 4);
                };
                auto a = via(DelPezzo6Model::p2xp2);
                auto b = via(DelPezzo6Model::p1xp1xp1);
                if (a.layout() != printed) ctx.fail(r, "P2xP2 route does not match the printed array");
                if (b.layout() != printed) ctx.fail(r, "P1xP1xP1 route does not match the printed array");
                if (!(a == b)) ctx.fail(r, "the two routes disagree");
                if (!a.gorenstein_symmetric()) ctx.fail(r, "final diagram is not Gorenstein-symmetric");
                if (r.status == CheckResult::Status::pass) r.detail = "exact, both routes equal";
            });
}

void check_catalog(Context& ctx) {
    ctx.run("A9", "catalog integrity: bookkeeping on all rows, duplicates and the discrepancy", 0,
            [&ctx](CheckResult& r) {
                auto report = reproduce_tables(ctx.catalog);
                int failed_rows = 0;
                for (const auto& row : report.rows)
                    if (!row.pass) ++failed_rows;
                if (failed_rows) ctx.fail(r, std::to_string(failed_rows) + " rows fail bookkeeping");
                if (report.duplicate_flags.size() != 2)
                    ctx.fail(r, "expected exactly 2 duplicate pairs, found " +
                                    std::to_string(report.duplicate_flags.size()));
                bool pair_3_17 = false, pair_7_19 = false;
                for (const auto& row : ctx.catalog.codim2()) {
                    if (row.id == 17 && row.duplicate_of == 3) pair_3_17 = true;
                    if (row.id == 19 && row.duplicate_of == 7) pair_7_19 = true;
                }
                if (!pair_3_17 || !pair_7_19) ctx.fail(r, "the duplicate pairs are not rows 3/17 and 7/19");
                if (report.discrepancy_flags.size() != 1)
                    ctx.fail(r, "expected exactly 1 recorded discrepancy, found " +
                                    std::to_string(report.discrepancy_flags.size()));
                if (r.status == CheckResult::Status::pass)
                    r.detail = std::to_string(report.rows.size()) +
                               " rows pass; 2 duplicate pairs and 1 discrepancy flagged";
            });
}

void check_property_suites(Context& ctx) {
    ctx.run("A10", "property suites: membership oracle, Pf^2 = det, parser round trip", 60,
            [&ctx](CheckResult& r) {
                // membership versus bounded-degree linear algebra on 50 ideals
                auto ring = GradedRing::projective(4, ctx.field);
                auto basis_index = [&](const std::vector<Monomial>& basis, const Monomial& m) {
                    for (std::size_t i = 0; i < basis.size(); ++i)
                        if (basis[i] == m) return i;
                    throw Error("missing monomial");
                };
                int agreements = 0;
                for (std::uint64_t seed = 1; seed <= 50; ++seed) {
                    Rng rng(ctx.config.seed * 1000 + seed);
                    std::vector<Polynomial> gens;
                    for (int k = 0; k < 3; ++k)
                        gens.push_back(
                            random_form(ring, 2 + static_cast<long long>(rng.split(k).below(2)),
                                        rng.split(100 + k))
                                .poly);
                    Ideal I(ring, gens);
                    auto member = gens[0] * random_form(ring, 4 - gens[0].weighted_degree(),
                                                        rng.split("m"))
                                                .poly +
                                  gens[1] * random_form(ring, 4 - gens[1].weighted_degree(),
                                                        rng.split("n"))
                                                .poly;
                    auto probe = random_form(ring, 4, rng.split("p")).poly;
                    for (const auto& f : {member, probe}) {
                        if (f.is_zero()) continue;
                        bool via_gb = normal_form(f, I).is_zero();
                        auto basis = monomial_basis(*ring, 4);
                        std::vector<Polynomial> rows;
                        for (const auto& g : gens)
                            for (const auto& m : monomial_basis(*ring, 4 - g.weighted_degree()))
                                rows.push_back(
                                    g * Polynomial::monomial(ring, m, Scalar::one(ctx.field)));
                        ScalarMatrix A(rows.size(), basis.size(), ctx.field);
                        ScalarMatrix B(rows.size() + 1, basis.size(), ctx.field);
                        for (std::size_t i = 0; i < rows.size(); ++i)
                            for (const auto& t : rows[i].terms()) {
                                A.at(i, basis_index(basis, t.mono)) = t.coef;
                                B.at(i, basis_index(basis, t.mono)) = t.coef;
                            }
                        for (const auto& t : f.terms()) B.at(rows.size(), basis_index(basis, t.mono)) = t.coef;
                        bool via_la = A.rank() == B.rank();
                        if (via_gb != via_la) ctx.fail(r, "membership disagreement at a seed");
                        ++agreements;
                    }
                }

                // Pf^2 = det on 200 random 4x4 antisymmetric matrices
                auto ring4 = GradedRing::projective(4, ctx.field);
                for (std::uint64_t seed = 1; seed <= 200; ++seed) {
                    auto m = AntisymmetricMatrix::generic(ring4, {1, 1, 1, 1}, Rng(seed));
                    std::vector<std::vector<Polynomial>> rows;
                    for (std::size_t i = 0; i < 4; ++i) {
                        std::vector<Polynomial> row;
                        for (std::size_t j = 0; j < 4; ++j) row.push_back(m.at(i, j));
                        rows.push_back(row);
                    }
                    auto pf = m.pfaffian();
                    if (pf * pf != oracle_det(rows, {0, 1, 2, 3}, {0, 1, 2, 3}, ring4))
                        ctx.fail(r, "Pf^2 != det at a seed");
                }

                // parser round trip over the matrix corpus
                auto sring = GradedRing::make({"t", "a1", "a2", "a3", "b1", "b2", "b3", "q1", "q2", "q3",
                                               "h1", "h2", "h3", "h4", "l1", "l2", "l3", "l4"},
                                              std::vector<int>(18, 1), Field::rationals());
                std::vector<std::string> corpus = {
                    "0", "t", "-t", "a1", "a2", "a3", "-a1", "-a2", "-a3", "b1", "b2", "b3", "-b1",
                    "-b2", "-b3", "q1", "q2", "q3", "-q1", "-q2", "-q3", "h1", "h2", "h3", "h4",
                    "-h1", "-h2", "-h3", "-h4", "l1", "l2", "l3", "l4", "-l1", "-l2", "-l3", "-l4",
                    "t*q1 - a2*b3 + a3*b2", "t*q2 - a3*b1 + a1*b3", "t*q3 - a1*b2 + a2*b1",
                    "b1*q1 + b2*q2 + b3*q3", "a1*q1 + a2*q2 + a3*q3", "h2*l3 - h1*l4",
                    "l1*h1 - l2*l3", "l1*h2 - l2*l4", "l1*h3 - l3*l4"};
                for (const auto& text : corpus) {
                    auto f = parse_polynomial(text, sring);
                    if (parse_polynomial(f.str(), sring) != f) ctx.fail(r, "round trip fails: " + text);
                    if (parse_polynomial(f.str(), sring).str() != f.str())
                        ctx.fail(r, "format not canonical: " + text);
                }
                if (r.status == CheckResult::Status::pass)
                    r.detail = std::to_string(agreements) + " membership agreements, 200 Pfaffians, " +
                               std::to_string(corpus.size()) + " corpus strings";
            });
}

}  // namespace

std::vector<CheckResult> run_paper_checks(const RunConfig& config) {
    Context ctx{config, config.prime == 0 ? Field::rationals() : Field::prime(config.prime),
                Catalog::load(config.data_dir), {}};
    ctx.jobs.reserve(16);
    check_pfaffian_identity(ctx);
    check_codim2_identity(ctx);
    check_elimination(ctx);
    check_node_counts(ctx);
    check_ci_invariants(ctx);
    check_lemma_invariants(ctx);
    check_smoothness(ctx);
    check_betti(ctx);
    check_catalog(ctx);
    check_property_suites(ctx);
    return ctx.execute();
}

Json checks_to_json(const std::vector<CheckResult>& results, const RunConfig& config) {
    Json checks = Json::array();
    for (const auto& r : results) {
        Json c{{"id", r.id}, {"title", r.title}, {"status", r.status_name()}};
        if (!r.detail.empty()) c["detail"] = r.detail;
        checks.push_back(std::move(c));
    }
    return Json{{"config",
                 Json{{"prime", config.prime},
                      {"seed", config.seed},
                      {"budget", config.budget},
                      {"only", config.only},
                      {"jobs", config.jobs}}},
                {"checks", checks}};
}

int exit_code_for(const std::vector<CheckResult>& results) {
    bool inconclusive = false;
    for (const auto& r : results) {
        if (r.status == CheckResult::Status::fail) return 1;
        if (r.status == CheckResult::Status::inconclusive) inconclusive = true;
    }
    return inconclusive ? 2 : 0;
}

}  // namespace kmu
