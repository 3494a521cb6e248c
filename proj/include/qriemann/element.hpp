#pragma once

#include "qriemann/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace qriemann {

// One factor g^exp of a word; exp is never 0 and adjacent factors of a
// word never share the same generator.
struct Factor {
    int gen;
    int exp;

    friend bool operator==(const Factor&, const Factor&) = default;
};

using Word = std::vector<Factor>;

// Static description of a generator.  Rewrite rules and star images
// live in the presentation, not here.
struct Generator {
    std::string name;
    int degree = 0;        // form degree of one letter
    bool invertible = false;
    bool constant = false; // central constant, printed before the coefficient
    bool half_exp = false; // exponent stored in half units, prints name^(k/2)
};

// Number of unit letters, counting g^e as |e| letters.
int word_unit_length(const Word& w);

// Total form degree (sum of letter degrees weighted by exponents).
int word_degree(const Word& w, const std::vector<Generator>& gens);

// Appends one factor, merging with the back of the word; a vanishing
// exponent drops the merged factor and the cascade continues.
void word_push(Word& w, Factor f);

// Concatenation with the merge cascade: adjacent equal generators
// combine and vanishing exponents drop out, possibly recursively.
Word word_concat(const Word& a, const Word& b);

// Graded order: shorter unit length first, then lexicographic on the
// unit-letter expansion by (generator index, sign of exponent) with
// positive exponents before negative ones.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const;
};

// Finite linear combination of words with exact scalar coefficients.
class Element {
  public:
    using Terms = std::map<Word, QScalar, WordLess>;

    Element() = default; // zero

    static Element scalar(QScalar v);
    static Element generator(int gen, int exp = 1);
    static Element monomial(QScalar coeff, Word w);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    // Coefficient accumulation; a cancelled term disappears.
    void add_term(const Word& w, const QScalar& c);

    QScalar coeff(const Word& w) const;

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Element& o);
    Element& operator*=(const QScalar& k);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Element& b) { return a *= b; }
    friend Element operator*(Element a, const QScalar& k) { return a *= k; }
    friend Element operator*(const QScalar& k, Element a) { return a *= k; }

    Element pow(int e) const; // e >= 0

    // Formal inverse of a one-term element whose generators are all
    // invertible: word reversed, exponents negated, coefficient
    // inverted.  Anything else raises std::domain_error.
    Element inv_single(const std::vector<Generator>& gens) const;

    friend bool operator==(const Element&, const Element&) = default;

    // Terms are printed leading word first; within a term any leading
    // central constants come before the numeric coefficient.
    std::string to_string(const std::vector<Generator>& gens) const;

  private:
    Terms terms_;
};

} // namespace qriemann
