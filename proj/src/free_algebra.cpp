#include "pbwkit/free_algebra.hpp"

#include "pbwkit/error.hpp"

#include <cstdlib>

namespace pbwkit {

Word concat(const Word& a, const Word& b) {
    Word w;
    w.reserve(a.size() + b.size());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

Element Element::word(const Word& w, const Scalar& c) {
    Element e;
    e.add_term(w, c);
    return e;
}

Scalar Element::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

void Element::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Element Element::component(int n) const {
    Element out;
    for (const auto& [w, c] : terms_)
        if (int(w.size()) == n) out.terms_.emplace_hint(out.terms_.end(), w, c);
    return out;
}

Element Element::truncate(int n) const {
    Element out;
    for (const auto& [w, c] : terms_)
        if (int(w.size()) <= n) out.terms_.emplace_hint(out.terms_.end(), w, c);
    return out;
}

Element Element::operator-() const {
    Element out = *this;
    for (auto& [w, c] : out.terms_) c = -c;
    return out;
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

Element operator*(const Element& a, const Element& b) {
    Element out;
    for (const auto& [u, c] : a.terms_)
        for (const auto& [v, d] : b.terms_) out.add_term(concat(u, v), c * d);
    return out;
}

Element operator*(const Scalar& c, const Element& a) {
    Element out;
    if (c.is_zero()) return out;
    for (const auto& [w, d] : a.terms_) out.add_term(w, c * d);
    return out;
}

bool operator==(const Element& a, const Element& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    for (; i != a.terms_.end(); ++i, ++j)
        if (i->first != j->first || i->second != j->second) return false;
    return true;
}

void HomogenizedElement::add_term(const Word& w, const Scalar& c) {
    if (int(w.size()) > degree_) throw Error(ErrorCode::DomainMismatch, "word longer than the homogeneous degree");
    body_.add_term(w, c);
}

HomogenizedElement homogenize(const Element& a) {
    if (a.is_zero()) throw Error(ErrorCode::HomogenizeZero, "cannot homogenize the zero element");
    return homogenize(a, a.degree());
}

HomogenizedElement homogenize(const Element& a, int degree) {
    HomogenizedElement h(degree);
    for (const auto& [w, c] : a.terms()) h.add_term(w, c);
    return h;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += '*';
        s += w[i] < names.size() ? names[w[i]] : "x" + std::to_string(w[i]);
    }
    return s;
}

std::string element_to_string(const Element& e, const std::vector<std::string>& names) {
    if (e.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        bool neg = c.is_negative();
        Scalar mag = neg ? -c : c;
        if (first) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        if (w.empty()) {
            s += mag.str();
        } else {
            if (!mag.is_one()) s += mag.str() + "*";
            s += word_to_string(w, names);
        }
    }
    return s;
}

std::uint64_t checked_pow(std::size_t g, int n) {
    std::uint64_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (g && r > (std::uint64_t(1) << 62) / g) throw Error(ErrorCode::ResourceLimit, "dimension overflow");
        r *= g;
    }
    return r;
}

std::uint64_t max_columns() {
    if (const char* env = std::getenv("PBWKIT_MAX_COLUMNS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return 2000000;
}

void require_columns(std::uint64_t n, const std::string& what) {
    if (n > max_columns())
        throw Error(ErrorCode::ResourceLimit,
                    what + " needs " + std::to_string(n) + " columns, above the limit of " + std::to_string(max_columns()));
}

std::uint64_t word_index(const Word& w, std::size_t g) {
    std::uint64_t idx = 0;
    for (Letter a : w) idx = idx * g + a;
    return idx;
}

Word word_at(std::uint64_t idx, int n, std::size_t g) {
    Word w(std::size_t(n), 0);
    for (int i = n - 1; i >= 0; --i) {
        w[std::size_t(i)] = Letter(idx % g);
        idx /= g;
    }
    return w;
}

SparseVec homogeneous_vector(const Element& e, int n, std::size_t g) {
    std::vector<Entry> t;
    for (const auto& [w, c] : e.terms()) {
        if (int(w.size()) != n) throw Error(ErrorCode::NotHomogeneous, "element has a component outside degree " + std::to_string(n));
        t.push_back({Col(word_index(w, g)), c});
    }
    return canonicalize(std::move(t));
}

Element from_homogeneous_vector(const SparseVec& v, int n, std::size_t g) {
    Element e;
    for (const auto& x : v) e.add_term(word_at(x.col, n, g), x.val);
    return e;
}

FilteredIndex::FilteredIndex(std::size_t g, int top) : g_(g), top_(top) {
    pow_.resize(std::size_t(top) + 2);
    for (int d = 0; d <= top + 1; ++d) pow_[std::size_t(d)] = checked_pow(g, d);
    offset_.assign(std::size_t(top) + 1, 0);
    for (int d = top - 1; d >= 0; --d) offset_[std::size_t(d)] = offset_[std::size_t(d) + 1] + pow_[std::size_t(d) + 1];
    size_ = std::size_t(offset_[0] + pow_[0]);
    require_columns(size_, "T^{<=" + std::to_string(top) + "}");
}

int FilteredIndex::degree_of(Col c) const {
    for (int d = top_; d >= 0; --d)
        if (c < offset_[std::size_t(d)] + pow_[std::size_t(d)]) return d;
    return 0;
}

Word FilteredIndex::word(Col c) const {
    int d = degree_of(c);
    return word_at(c - offset_[std::size_t(d)], d, g_);
}

SparseVec FilteredIndex::vector(const Element& e) const {
    std::vector<Entry> t;
    for (const auto& [w, c] : e.terms()) {
        if (int(w.size()) > top_) throw Error(ErrorCode::DomainMismatch, "element exceeds the filtration bound");
        t.push_back({col(w), c});
    }
    return canonicalize(std::move(t));
}

Element FilteredIndex::element(const SparseVec& v) const {
    Element e;
    for (const auto& x : v) e.add_term(word(x.col), x.val);
    return e;
}

Col FilteredIndex::left(Letter a, Col c) const {
    int d = degree_of(c);
    if (d >= top_) throw Error(ErrorCode::DomainMismatch, "product leaves the filtered space");
    std::uint64_t idx = c - offset_[std::size_t(d)];
    return Col(offset_[std::size_t(d) + 1] + a * pow_[std::size_t(d)] + idx);
}

Col FilteredIndex::right(Col c, Letter a) const {
    int d = degree_of(c);
    if (d >= top_) throw Error(ErrorCode::DomainMismatch, "product leaves the filtered space");
    std::uint64_t idx = c - offset_[std::size_t(d)];
    return Col(offset_[std::size_t(d) + 1] + idx * g_ + a);
}

} // namespace pbwkit
