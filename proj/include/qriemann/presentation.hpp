#pragma once

#include "qriemann/element.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qriemann {

// How much of the two adjacent factors g_l^m g_r^n a pair rule
// consumes: both factors entirely, or a single unit letter on one or
// both sides (the letters at the contact point).
enum class MatchKind { Full, UnitLeft, UnitRight, UnitBoth };

enum class SignCond { Any, Pos, Neg };

// Scalar template a * s^(sm*m + sn*n + smn*m*n) in the matched
// exponents.  Coefficients that are q-integers in an exponent expand
// into two of these.
struct TMono {
    QScalar a;
    int sm = 0, sn = 0, smn = 0;

    QScalar eval(int m, int n) const {
        return a * QScalar::s_power(sm * m + sn * n + smn * m * n);
    }
};

// Word-factor template g^(cm*m + cn*n + cc); a vanishing exponent
// drops the factor.
struct TFactor {
    int gen;
    int cm = 0, cn = 0, cc = 0;
};

struct RhsTerm {
    TMono coeff;
    std::vector<TFactor> word;
};

struct PairRule {
    int gl, gr;
    MatchKind kind = MatchKind::Full;
    SignCond sl = SignCond::Any, sr = SignCond::Any;
    std::vector<RhsTerm> rhs;
};

// g^exp -> g^(exp-step) * rhs, applied while exp >= threshold for
// positive thresholds, or exp <= threshold for negative ones.
struct PowerRule {
    int gen;
    int threshold;
    int step;
    Element rhs;
};

// A presented algebra: generators, oriented rewrite rules, an
// involution and a differential.  The rewrite system is deterministic
// (leftmost-innermost, at most one applicable rule per site).
class Presentation {
  public:
    int add_generator(Generator g);
    int gen_index(std::string_view name) const; // -1 when absent
    const std::vector<Generator>& gens() const { return gens_; }
    const Generator& gen(int idx) const { return gens_[idx]; }

    void add_pair_rule(PairRule r);
    void add_power_rule(PowerRule r);
    // gl^m gr^n -> s^(cross*m*n) gr^n gl^m
    void add_swap_rule(int gl, int gr, int cross_spower);
    // Swap rules pulling central constants to the left of every
    // generator that lacks an explicit rule against them.
    void finalize_constants();

    void set_step_budget(long budget) { budget_ = budget; }

    Element normal_form(const Element& e) const;
    bool word_is_normal(const Word& w) const;
    // Every single rewrite step applicable anywhere in w, one Element
    // per (site, rule) choice.  Used by the confluence checker.
    std::vector<Element> one_step_rewrites(const Word& w) const;

    // Involution.  The image is of one positive stored unit; images of
    // invertible generators must be single-term so that negative
    // powers invert cleanly.
    void set_star(int gen, Element image);
    // Antilinear antimultiplicative extension; result is not reduced.
    Element star(const Element& e) const;

    // Differential, either by explicit generator images (extended as a
    // graded derivation) or through left multiplication by operator
    // letters whose action part is kept (set_d_operator).  Explicit
    // images take precedence.
    void set_d_image(int gen, Element image);
    void set_d_operator(int dz_gen, int del_gen, int dzb_gen, int delb_gen);
    bool has_d() const { return del_gen_ >= 0 || !d_images_.empty(); }
    Element d(const Element& e) const; // reduced
    int del_gen() const { return del_gen_; }
    int delb_gen() const { return delb_gen_; }

    // Left action of an operator letter: the operator-free part of
    // normal_form(op * e).
    Element apply_operator(int op, const Element& e) const;

    // Bidegree bookkeeping for the holomorphic/antiholomorphic split.
    void classify_form(int gen, int holomorphic); // +1 or -1
    const std::set<int>& hol_form_gens() const { return hol_forms_; }
    const std::set<int>& antihol_form_gens() const { return antihol_forms_; }
    std::pair<int, int> word_bidegree(const Word& w) const;
    Element bidegree_part(const Element& e, int p, int r) const;
    Element d_hol(const Element& e) const;     // terms raising (p, r) by (1, 0)
    Element d_antihol(const Element& e) const; // by (0, 1)

    std::string print(const Element& e) const { return e.to_string(gens_); }

    const std::map<std::pair<int, int>, std::vector<PairRule>>& pair_rules() const {
        return pair_rules_;
    }
    const std::map<int, std::vector<PowerRule>>& power_rules() const {
        return power_rules_;
    }

  private:
    struct Redex {
        size_t pos;
        const PowerRule* power = nullptr;
        const PairRule* pair = nullptr;
    };

    const PowerRule* find_power_rule(const Factor& f) const;
    const PairRule* find_pair_rule(const Factor& l, const Factor& r) const;
    std::optional<Redex> find_redex(const Word& w) const;
    Element apply_power(const Word& w, size_t j, const PowerRule& r) const;
    Element apply_pair(const Word& w, size_t j, const PairRule& r) const;
    Element splice(const Word& w, size_t j, size_t count,
                   const Element& middle) const;
    Element d_factor(int gen, int exp) const;
    Element operator_action(int op, int gen, int exp) const;

    std::vector<Generator> gens_;
    std::map<std::string, int, std::less<>> names_;
    std::map<std::pair<int, int>, std::vector<PairRule>> pair_rules_;
    std::map<int, std::vector<PowerRule>> power_rules_;
    std::map<int, Element> star_images_;
    std::map<int, Element> d_images_;
    int dz_gen_ = -1, del_gen_ = -1, dzb_gen_ = -1, delb_gen_ = -1;
    std::set<int> hol_forms_, antihol_forms_;
    long budget_ = 1000000;
};

struct ConfluenceReport {
    std::vector<std::string> violations;
    long words_checked = 0;
};

// Reduces every one-step rewrite of every short word (up to three
// factors, small exponent windows, total unit length <= max_units) and
// reports words whose reduction paths disagree.
ConfluenceReport check_confluence(const Presentation& p, int max_units = 4);

// Advisory: pair rules whose instantiated right-hand words do not
// shrink in the word order.  Legitimate for braided relations; useful
// when deriving new rule sets.
std::vector<std::string> orientation_warnings(const Presentation& p);

// Split by total form degree.
std::map<int, Element> graded_components(const Element& e, const Presentation& p);

// Applies the algebra map sending each listed generator to its image and
// fixing the rest, then reduces in the target presentation.  Mapped
// generators may only appear with nonnegative exponents.
Element substitute(const Element& e, const std::map<int, Element>& images,
                   const Presentation& target);

} // namespace qriemann
