#pragma once

#include "pbwkit/linalg.hpp"
#include "pbwkit/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pbwkit {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

// Global word order: longer words first, then lexicographic by letter index.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    }
};

Word concat(const Word& a, const Word& b);

// Finite linear combination of words of the free algebra k<x_1..x_g>.
class Element {
public:
    using Terms = std::map<Word, Scalar, WordOrder>;

    Element() = default;
    static Element word(const Word& w, const Scalar& c = Scalar(1));
    static Element unit(const Scalar& c = Scalar(1)) { return word(Word{}, c); }
    static Element letter(Letter a, const Scalar& c = Scalar(1)) { return word(Word{a}, c); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Degree of the top component, -1 for zero.
    int degree() const { return terms_.empty() ? -1 : int(terms_.begin()->first.size()); }
    // Degree of the lowest component, -1 for zero.
    int low_degree() const { return terms_.empty() ? -1 : int(terms_.rbegin()->first.size()); }
    bool is_homogeneous() const { return degree() == low_degree(); }
    Scalar coeff(const Word& w) const;

    void add_term(const Word& w, const Scalar& c);
    Element component(int n) const;
    Element truncate(int n) const;
    Element leading() const { return component(degree()); }

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(const Scalar& c, const Element& a);
    friend bool operator==(const Element& a, const Element& b);
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

private:
    Terms terms_;
};

// Element of T[z] with z central; homogeneous of a fixed total degree.
class HomogenizedElement {
public:
    HomogenizedElement(int degree = 0) : degree_(degree) {}
    int degree() const { return degree_; }
    // Terms keyed by word; the power of z is degree() - word length.
    const Element& body() const { return body_; }
    void add_term(const Word& w, const Scalar& c);
    Element at_z_one() const { return body_; }
    Element at_z_zero() const { return body_.component(degree_); }
    bool is_zero() const { return body_.is_zero(); }

private:
    int degree_;
    Element body_;
};

// a* = sum_i a_i z^(d - i); throws HOMOGENIZE_ZERO for a = 0.
HomogenizedElement homogenize(const Element& a);
HomogenizedElement homogenize(const Element& a, int degree);

std::string word_to_string(const Word& w, const std::vector<std::string>& names);
std::string element_to_string(const Element& e, const std::vector<std::string>& names);

// Column bookkeeping for homogeneous and filtered pieces of T.
std::uint64_t checked_pow(std::size_t g, int n);
// Column budget per ambient space, from PBWKIT_MAX_COLUMNS or 2e6.
std::uint64_t max_columns();
void require_columns(std::uint64_t n, const std::string& what);

std::uint64_t word_index(const Word& w, std::size_t g);
Word word_at(std::uint64_t idx, int n, std::size_t g);

// Columns of T^n in lexicographic order.
SparseVec homogeneous_vector(const Element& e, int n, std::size_t g);
Element from_homogeneous_vector(const SparseVec& v, int n, std::size_t g);

// Columns of T^{<=N}, longest words first.
class FilteredIndex {
public:
    FilteredIndex(std::size_t g, int top);
    std::size_t g() const { return g_; }
    int top() const { return top_; }
    std::size_t size() const { return size_; }
    Col col(const Word& w) const { return Col(offset_[w.size()] + word_index(w, g_)); }
    int degree_of(Col c) const;
    Word word(Col c) const;
    // First column of degree <= n; columns from here on span T^{<=n}.
    Col start_of(int n) const { return n >= top_ ? 0 : Col(offset_[std::size_t(n)]); }
    SparseVec vector(const Element& e) const;
    Element element(const SparseVec& v) const;
    // Column of the word obtained by multiplying the word at c by a letter.
    Col left(Letter a, Col c) const;
    Col right(Col c, Letter a) const;

private:
    std::size_t g_;
    int top_;
    std::size_t size_;
    std::vector<std::uint64_t> offset_;
    std::vector<std::uint64_t> pow_;
};

} // namespace pbwkit
