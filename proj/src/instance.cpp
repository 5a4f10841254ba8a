#include "wcc/instance.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wcc {

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw Error("empty number");
    std::string s(text);
    size_t slash = s.find('/');
    if (slash != std::string::npos) {
        Rational r;
        if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
            throw Error("malformed rational '" + s + "'");
        if (r.get_den() == 0) throw Error("zero denominator in '" + s + "'");
        r.canonicalize();
        return r;
    }
    size_t dot = s.find('.');
    if (dot == std::string::npos) {
        Rational r;
        if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
            throw Error("malformed number '" + s + "'");
        r.canonicalize();
        return r;
    }
    // Finite decimal: digits around one dot, converted exactly.
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (frac_len == 0 || dot == 0 ||
        (dot == 1 && (digits[0] == '+' || digits[0] == '-')))
        throw Error("malformed decimal '" + s + "'");
    for (size_t k = 0; k < digits.size(); ++k) {
        bool sign_ok = k == 0 && (digits[k] == '+' || digits[k] == '-');
        if (!sign_ok && !std::isdigit(static_cast<unsigned char>(digits[k])))
            throw Error("malformed decimal '" + s + "'");
    }
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    return value.get_str();
}

std::string_view regime_name(Regime regime) {
    switch (regime) {
        case Regime::General: return "general";
        case Regime::Probability: return "probability";
        case Regime::ProbabilityAndTriangle: return "probability-triangle";
    }
    throw Error("unknown regime");
}

Regime regime_from_name(std::string_view name) {
    if (name == "general") return Regime::General;
    if (name == "probability") return Regime::Probability;
    if (name == "probability-triangle") return Regime::ProbabilityAndTriangle;
    throw Error("unknown regime '" + std::string(name) + "'");
}

WeightedInstance::WeightedInstance(int n, Regime regime,
                                   std::vector<std::pair<Rational, Rational>> weights)
    : n_(n), regime_(regime), weights_(std::move(weights)) {
    if (n_ < 0) throw Error("negative vertex count");
    size_t expected = static_cast<size_t>(n_) * (n_ - 1) / 2;
    if (n_ == 0) expected = 0;
    if (weights_.size() != expected)
        throw Error("expected " + std::to_string(expected) + " pairs, got " +
                    std::to_string(weights_.size()));
    validate();
}

size_t WeightedInstance::index(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_)
        throw Error("pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    if (i > j) std::swap(i, j);
    return pair_index(i, j, n_);
}

namespace {

std::string pair_str(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

void WeightedInstance::validate() const {
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            const auto& [wp, wm] = weights_[pair_index(i, j, n_)];
            if (wp < 0 || wm < 0)
                throw Error("negative weight at " + pair_str(i, j));
            if (regime_ == Regime::Probability || regime_ == Regime::ProbabilityAndTriangle) {
                Rational sum = wp + wm;
                if (sum != 1)
                    throw Error("probability constraint violated at " + pair_str(i, j) +
                                ": sum " + format_rational(sum));
            }
        }
    }
    if (regime_ == Regime::ProbabilityAndTriangle) {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                for (int k = j + 1; k < n_; ++k) {
                    const Rational& a = w_minus(i, j);
                    const Rational& b = w_minus(j, k);
                    const Rational& c = w_minus(i, k);
                    if (a > b + c || b > a + c || c > a + b)
                        throw Error("triangle constraint violated at (" + std::to_string(i) +
                                    "," + std::to_string(j) + "," + std::to_string(k) + ")");
                }
    }
}

WeightedInstance WeightedInstance::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto next_line = [&](bool required) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
                line.pop_back();
            size_t start = 0;
            while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start])))
                ++start;
            line.erase(0, start);
            if (!line.empty()) return true;
        }
        if (required) throw Error("unexpected end of file at line " + std::to_string(lineno));
        return false;
    };

    next_line(true);
    if (line != "wcc v1") throw Error("bad header '" + line + "' (expected 'wcc v1')");

    next_line(true);
    std::istringstream nline(line);
    std::string key, extra_tok;
    long long n = -1;
    nline >> key >> n;
    if (key != "n" || nline.fail() || n < 0 || (nline >> extra_tok))
        throw Error("bad vertex count line '" + line + "'");
    // Explicit files carry all C(n,2) pairs; keep them desk-sized.
    if (n > 2048) throw Error("vertex count " + std::to_string(n) + " too large for an explicit instance file");

    next_line(true);
    std::istringstream rline(line);
    std::string regime_word;
    rline >> key >> regime_word;
    if (key != "regime" || rline.fail() || (rline >> extra_tok))
        throw Error("bad regime line '" + line + "'");
    Regime regime = regime_from_name(regime_word);

    size_t pairs = static_cast<size_t>(n) * (n - 1) / 2;
    if (n == 0) pairs = 0;
    std::vector<std::pair<Rational, Rational>> weights(pairs, {Rational(0), Rational(0)});
    std::vector<bool> seen(pairs, false);

    while (next_line(false)) {
        std::istringstream pline(line);
        long long i, j;
        std::string wp_str, wm_str, extra;
        pline >> i >> j >> wp_str >> wm_str;
        if (pline.fail() || (pline >> extra))
            throw Error("malformed pair line " + std::to_string(lineno) + ": '" + line + "'");
        if (i < 0 || j < 0 || i >= n || j >= n || i >= j)
            throw Error("bad pair (" + std::to_string(i) + "," + std::to_string(j) +
                        ") at line " + std::to_string(lineno));
        size_t idx = pair_index(static_cast<int>(i), static_cast<int>(j), static_cast<int>(n));
        if (seen[idx])
            throw Error("duplicate pair " + pair_str(static_cast<int>(i), static_cast<int>(j)));
        seen[idx] = true;
        weights[idx] = {parse_rational(wp_str), parse_rational(wm_str)};
    }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!seen[pair_index(i, j, static_cast<int>(n))])
                throw Error("missing pair " + pair_str(i, j));

    return WeightedInstance(static_cast<int>(n), regime, std::move(weights));
}

std::string WeightedInstance::serialize() const {
    std::ostringstream out;
    out << "wcc v1\n";
    out << "n " << n_ << "\n";
    out << "regime " << regime_name(regime_) << "\n";
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            const auto& [wp, wm] = weights_[pair_index(i, j, n_)];
            out << i << " " << j << " " << format_rational(wp) << " " << format_rational(wm)
                << "\n";
        }
    return out.str();
}

Clustering::Clustering(std::vector<int> labels) {
    // Canonicalize to first-appearance order.
    labels_.resize(labels.size());
    std::vector<int> remap;
    for (size_t v = 0; v < labels.size(); ++v) {
        int raw = labels[v];
        int found = -1;
        for (size_t k = 0; k < remap.size(); ++k)
            if (remap[k] == raw) { found = static_cast<int>(k); break; }
        if (found < 0) {
            found = static_cast<int>(remap.size());
            remap.push_back(raw);
        }
        labels_[v] = found;
    }
    cluster_count_ = static_cast<int>(remap.size());
}

Clustering Clustering::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<int> labels;
    long long expected_vertex = 0;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long v, c;
        if (!(ls >> v)) continue;
        if (!(ls >> c)) throw Error("malformed clustering line '" + line + "'");
        if (v != expected_vertex)
            throw Error("clustering vertices must be ascending from 0; got " + std::to_string(v));
        labels.push_back(static_cast<int>(c));
        ++expected_vertex;
    }
    return Clustering(std::move(labels));
}

std::string Clustering::serialize() const {
    std::ostringstream out;
    for (size_t v = 0; v < labels_.size(); ++v) out << v << " " << labels_[v] << "\n";
    return out.str();
}

XLabeling::XLabeling(int n, Rational fill) : n_(n) {
    size_t pairs = n > 0 ? static_cast<size_t>(n) * (n - 1) / 2 : 0;
    values_.assign(pairs, fill);
}

const Rational& XLabeling::x(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_)
        throw Error("x lookup out of range");
    if (i > j) std::swap(i, j);
    return values_[pair_index(i, j, n_)];
}

void XLabeling::set(int i, int j, Rational value) {
    if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_)
        throw Error("x index out of range");
    if (i > j) std::swap(i, j);
    values_[pair_index(i, j, n_)] = std::move(value);
}

Rational clustering_cost(const WeightedInstance& inst, const Clustering& c) {
    if (c.n() != inst.n())
        throw Error("clustering has " + std::to_string(c.n()) + " labels, instance has " +
                    std::to_string(inst.n()) + " vertices");
    Rational total(0);
    for (int i = 0; i < inst.n(); ++i)
        for (int j = i + 1; j < inst.n(); ++j)
            total += c.label(i) == c.label(j) ? inst.w_minus(i, j) : inst.w_plus(i, j);
    return total;
}

Rational lp_objective_integral(const WeightedInstance& inst, const XLabeling& x) {
    if (x.n() != inst.n()) throw Error("labeling size mismatch");
    Rational total(0);
    for (int i = 0; i < inst.n(); ++i)
        for (int j = i + 1; j < inst.n(); ++j) {
            const Rational& xij = x.x(i, j);
            if (xij < 0 || xij > 1)
                throw Error("x value outside [0,1] at pair (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
            total += (1 - xij) * inst.w_minus(i, j) + xij * inst.w_plus(i, j);
        }
    return total;
}

XLabeling labeling_from_clustering(const Clustering& c) {
    XLabeling x(c.n());
    for (int i = 0; i < c.n(); ++i)
        for (int j = i + 1; j < c.n(); ++j)
            x.set(i, j, Rational(c.label(i) == c.label(j) ? 0 : 1));
    return x;
}

}  // namespace wcc
