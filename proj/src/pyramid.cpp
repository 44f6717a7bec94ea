#include <dlog/pyramid.hpp>

#include <sstream>

namespace dlog::pyramid
{

namespace
{

AlphaPoly pconst(long v) { return AlphaPoly::constant(Rational(v), "p"); }
AlphaPoly pvar() { return AlphaPoly::variable("p"); }

template <typename T>
std::string render(const T &x)
{
    return x.get_str();
}
std::string render(const AlphaPoly &x) { return "(" + to_string(x) + ")"; }

template <typename E>
std::string slices(const Table<E> &t, unsigned from, unsigned to)
{
    if (to == 0 || to > t.n_max()) {
        to = t.n_max();
    }
    std::ostringstream os;
    for (unsigned n = from; n <= to; ++n) {
        os << "n=" << n << ":\n";
        for (unsigned k = 1; k <= n; ++k) {
            os << "k=" << k << ":";
            for (unsigned m = k; m <= n; ++m) {
                os << ' ' << render(t.at(n, k, m));
            }
            os << '\n';
        }
    }
    return os.str();
}

} // namespace

IntTable build(unsigned n_max)
{
    if (n_max < 1) {
        throw usage_error("pyramid needs n_max >= 1");
    }
    IntTable t(n_max);
    t.ref(1, 1, 1) = 1;
    for (unsigned n = 1; n < n_max; ++n) {
        for (unsigned k = 1; k <= n + 1; ++k) {
            for (unsigned m = k; m <= n + 1; ++m) {
                t.ref(n + 1, k, m) = BigInt(k) * t.at(n, k, m) + BigInt(m - 1) * t.at(n, k, m - 1) + t.at(n, k - 1, m - 1);
            }
        }
    }
    return t;
}

BigInt stirling2(unsigned n, unsigned k)
{
    std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(n + 1));
    s[0][0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = 1; j <= i; ++j) {
            s[i][j] = BigInt(j) * s[i - 1][j] + s[i - 1][j - 1];
        }
    }
    return k <= n ? s[n][k] : BigInt(0);
}

BigInt stirling1_unsigned(unsigned n, unsigned k)
{
    std::vector<std::vector<BigInt>> c(n + 1, std::vector<BigInt>(n + 1));
    c[0][0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = 1; j <= i; ++j) {
            c[i][j] = BigInt(i - 1) * c[i - 1][j] + c[i - 1][j - 1];
        }
    }
    return k <= n ? c[n][k] : BigInt(0);
}

Report faces_check(const IntTable &t)
{
    Report r;
    bool diag = true, last = true, first = true;
    for (unsigned n = 1; n <= t.n_max(); ++n) {
        for (unsigned m = 1; m <= n; ++m) {
            diag = diag && t.at(n, m, m) == stirling2(n, m);
            last = last && t.at(n, m, n) == stirling1_unsigned(n, m);
            first = first && t.at(n, 1, m) == factorial(n - 1) / factorial(n - m);
        }
    }
    r.add("A(n,m,m) = Stirling2(n,m)", diag);
    r.add("A(n,m,n) = |Stirling1(n,m)|", last);
    r.add("A(n,1,m) = (n-1)!/(n-m)!", first);
    return r;
}

Report row_sum_check(const IntTable &t, const Rational &x)
{
    if (x == 0) {
        throw domain_error("row sums need x != 0");
    }
    const unsigned N = t.n_max();
    // r_j = sum_{i<j} (-1)^i (j-1)!/(j-1-i)! x^{-i-1}
    std::vector<Rational> r(N + 1);
    for (unsigned j = 1; j <= N; ++j) {
        for (unsigned i = 0; i < j; ++i) {
            Rational term = Rational(factorial(j - 1) / factorial(j - 1 - i)) * pow(x, -long(i) - 1);
            r[j] += i % 2 == 0 ? term : Rational(-term);
        }
    }
    // bell[n][k] by B_{n,k} = sum_i C(n-1, i-1) r_i B_{n-i,k-1}
    std::vector<std::vector<Rational>> bell(N + 1, std::vector<Rational>(N + 1));
    bell[0][0] = 1;
    for (unsigned n = 1; n <= N; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            for (unsigned i = 1; i <= n - k + 1; ++i) {
                bell[n][k] += Rational(binomial(n - 1, i - 1)) * r[i] * bell[n - i][k - 1];
            }
        }
    }
    Report rep;
    bool ok = true;
    for (unsigned n = 1; n <= N; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            Rational s = 0;
            for (unsigned m = k; m <= n; ++m) {
                Rational term = Rational(t.at(n, k, m)) * pow(x, -long(m));
                s += (m - k) % 2 == 0 ? term : Rational(-term);
            }
            ok = ok && s == bell[n][k];
        }
    }
    rep.add("row sums vs Bell polynomials at x=" + to_string(x), ok);
    return rep;
}

bool all_positive(const IntTable &t)
{
    for (unsigned n = 1; n <= t.n_max(); ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            for (unsigned m = k; m <= n; ++m) {
                if (t.at(n, k, m) <= 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

PTables build_p(unsigned n_max)
{
    if (n_max < 1) {
        throw usage_error("pyramid needs n_max >= 1");
    }
    PTables out{PTable(n_max), PTable(n_max)};
    for (unsigned n = 1; n <= n_max; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            for (unsigned m = k; m <= n; ++m) {
                out.a.ref(n, k, m) = AlphaPoly(std::vector<Rational>{}, "p");
                out.b.ref(n, k, m) = AlphaPoly(std::vector<Rational>{}, "p");
            }
        }
    }
    out.a.ref(1, 1, 1) = pconst(1);
    out.b.ref(1, 1, 1) = pconst(1);
    AlphaPoly p = pvar();
    for (unsigned n = 1; n < n_max; ++n) {
        for (unsigned k = 1; k <= n + 1; ++k) {
            for (unsigned m = k; m <= n + 1; ++m) {
                long kk = k, mm = m;
                out.a.ref(n + 1, k, m) = (p * Rational(mm - kk) + pconst(kk)) * out.a.at(n, k, m) +
                                         out.a.at(n, k, m - 1) * Rational(mm - 1) + out.a.at(n, k - 1, m - 1);
                out.b.ref(n + 1, k, m) = (p * Rational(mm) - pconst(kk)) * out.b.at(n, k, m) +
                                         out.b.at(n, k, m - 1) * Rational(mm - 1) + out.b.at(n, k - 1, m - 1);
                out.a.ref(n + 1, k, m) = out.a.at(n + 1, k, m).with_var("p");
                out.b.ref(n + 1, k, m) = out.b.at(n + 1, k, m).with_var("p");
            }
        }
    }
    return out;
}

Table<Rational> evaluate(const PTable &t, const Rational &p)
{
    Table<Rational> out(t.n_max());
    for (unsigned n = 1; n <= t.n_max(); ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            for (unsigned m = k; m <= n; ++m) {
                out.ref(n, k, m) = t.at(n, k, m)(p);
            }
        }
    }
    return out;
}

IntTable evaluate_int(const PTable &t, const Rational &p)
{
    IntTable out(t.n_max());
    for (unsigned n = 1; n <= t.n_max(); ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            for (unsigned m = k; m <= n; ++m) {
                Rational v = t.at(n, k, m)(p);
                if (v.get_den() != 1) {
                    throw domain_error("table entry is not an integer at this p");
                }
                out.ref(n, k, m) = v.get_num();
            }
        }
    }
    return out;
}

std::vector<NormalForm> derivative_oracle(unsigned n_max, const Rational &p)
{
    if (n_max < 1 || n_max > max_oracle_n) {
        throw usage_error("derivative oracle limited to 1 <= n <= " + std::to_string(max_oracle_n));
    }
    std::vector<NormalForm> out(n_max + 1);
    // [d/dx F^a] F^{-a} = a e^x / D
    NormalForm cur;
    cur[{1, 1, 1}] = 1;
    out[1] = cur;
    auto add = [](NormalForm &f, unsigned k, unsigned j, unsigned m, const Rational &c) {
        if (c == 0) {
            return;
        }
        Rational &slot = f[{k, j, m}];
        slot += c;
        if (slot == 0) {
            f.erase({k, j, m});
        }
    };
    for (unsigned n = 2; n <= n_max; ++n) {
        NormalForm next;
        for (const auto &[key, c] : cur) {
            auto [k, j, m] = key;
            // product rule on a^k e^{jx} D^{-m} times F^a
            add(next, k, j, m, c * Rational(j));                   // (e^{jx})'
            add(next, k, j, m + 1, -c * Rational(m));              // (D^{-m})' = -m D^{-m-1} D'
            add(next, k, j, m, -c * Rational(m) * p);              //   with D' = 1 + p D
            add(next, k + 1, j + 1, m + 1, c);                     // F^a' / F^a
        }
        cur = std::move(next);
        out[n] = cur;
    }
    return out;
}

Report oracle_check_ei(unsigned n_max)
{
    IntTable t = build(n_max);
    auto oracle = derivative_oracle(n_max, 0);
    Report r;
    for (unsigned n = 1; n <= n_max; ++n) {
        NormalForm want;
        for (unsigned k = 1; k <= n; ++k) {
            for (unsigned m = k; m <= n; ++m) {
                Rational sign = (m - k) % 2 == 0 ? 1 : -1;
                want[{k, k, m}] = sign * Rational(t.at(n, k, m));
            }
        }
        r.add("ei n=" + std::to_string(n), want == oracle[n]);
    }
    return r;
}

Report oracle_check_tp(unsigned n_max, const Rational &p)
{
    PTables pt = build_p(n_max);
    auto A = evaluate(pt.a, p);
    auto B = evaluate(pt.b, p);
    auto oracle = derivative_oracle(n_max, p);
    Report r;
    for (unsigned n = 1; n <= n_max; ++n) {
        NormalForm from_b, from_a;
        auto put = [](NormalForm &f, unsigned k, unsigned m, const Rational &c) {
            if (c == 0) {
                return;
            }
            Rational &slot = f[{k, k, m}];
            slot += c;
            if (slot == 0) {
                f.erase({k, k, m});
            }
        };
        for (unsigned k = 1; k <= n; ++k) {
            for (unsigned m = k; m <= n; ++m) {
                Rational sb = (n - k) % 2 == 0 ? 1 : -1;
                put(from_b, k, m, sb * B.at(n, k, m));
                // (-1)^{m-k} e^{(k + p(m-k))x} D^{-m} A, expand (1 + pD)^{m-k}
                Rational sa = (m - k) % 2 == 0 ? 1 : -1;
                for (unsigned i = 0; i <= m - k; ++i) {
                    Rational c = sa * A.at(n, k, m) * Rational(binomial(m - k, i)) * pow(p, long(i));
                    put(from_a, k, m - i, c);
                }
            }
        }
        std::string tag = "tp p=" + to_string(p) + " n=" + std::to_string(n);
        r.add(tag + " B-form", from_b == oracle[n]);
        r.add(tag + " A-form", from_a == oracle[n]);
    }
    return r;
}

std::string format_slices(const IntTable &t, unsigned from, unsigned to) { return slices(t, from, to); }
std::string format_slices(const PTable &t, unsigned from, unsigned to) { return slices(t, from, to); }
std::string format_slices(const Table<Rational> &t, unsigned n_max) { return slices(t, 1, n_max); }

} // namespace dlog::pyramid
