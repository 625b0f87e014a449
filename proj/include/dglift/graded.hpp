#pragma once

#include <map>
#include <string>
#include <vector>

#include "dglift/matrix.hpp"

namespace dglift {

/* Finitely supported graded vector space with an ordered, named basis
 * in each degree. */
class GradedSpace {
public:
    explicit GradedSpace(const Field& field) : field_(field) {}

    const Field& field() const { return field_; }

    void add_basis_label(int degree, const std::string& label);

    size_t dim(int degree) const;
    size_t total_dim() const;
    const std::vector<std::string>& labels(int degree) const;
    const std::map<int, std::vector<std::string>>& all_labels() const { return labels_; }

    /* Degrees with nonzero dimension, ascending. */
    std::vector<int> support() const;
    int min_degree() const;  // 0 for the zero space
    int max_degree() const;

    size_t index_of(int degree, const std::string& label) const;
    bool has_label(const std::string& label) const;

    bool operator==(const GradedSpace& other) const { return labels_ == other.labels_; }

private:
    Field field_;
    std::map<int, std::vector<std::string>> labels_;
    static const std::vector<std::string> empty_;
};

/* A homogeneous element: a degree plus dense coordinates in that
 * degree's basis. The zero element of any degree is legal, including
 * in degrees outside the support (zero coordinates of dimension 0). */
struct Homog {
    int degree;
    Vec coords;

    bool is_zero() const { return is_zero_vec(coords); }
};

Homog zero_homog(const GradedSpace& space, int degree);
Homog basis_homog(const GradedSpace& space, int degree, size_t index);
Homog add(const Homog& a, const Homog& b);
Homog sub(const Homog& a, const Homog& b);
Homog scale(const FieldElement& c, const Homog& v);
Homog negate(const Homog& v);
bool equal(const Homog& a, const Homog& b);

/* Degree-homogeneous linear map of graded spaces; block j maps degree j
 * of the source into degree j + shift of the target. Absent blocks are
 * zero maps. */
class GradedMap {
public:
    GradedMap(GradedSpace source, GradedSpace target, int shift)
        : source_(std::move(source)), target_(std::move(target)), shift_(shift)
    {
    }

    const GradedSpace& source() const { return source_; }
    const GradedSpace& target() const { return target_; }
    int shift() const { return shift_; }

    void set_block(int degree, Matrix block);
    bool has_block(int degree) const { return blocks_.count(degree) != 0; }
    /* Zero matrix of the right shape when absent. */
    Matrix block(int degree) const;

    bool operator==(const GradedMap& other) const;

private:
    GradedSpace source_, target_;
    int shift_;
    std::map<int, Matrix> blocks_;
};

Homog apply_graded_map(const GradedMap& m, const Homog& v);

/* Cochain complex: a graded space with a square-zero differential of
 * shift +1. validate() checks the shape and d∘d = 0 exactly. */
class Complex {
public:
    Complex(GradedSpace space, GradedMap differential);

    static Complex with_zero_differential(GradedSpace space);

    const GradedSpace& space() const { return space_; }
    const GradedMap& differential() const { return d_; }

    Homog d(const Homog& v) const { return apply_graded_map(d_, v); }

    /* Nonempty iff d∘d != 0 or a block is malformed; entries name the
     * offending degree. */
    std::vector<std::string> validate() const;

private:
    GradedSpace space_;
    GradedMap d_;
};

/* Degree-j cohomology with canonical representatives and the linear
 * classification map determined by them. */
class CohomologyBasis {
public:
    CohomologyBasis(const Complex& c, int degree);

    int degree() const { return degree_; }
    size_t dim() const { return reps_.size(); }
    const std::vector<Homog>& representatives() const { return reps_; }

    /* Coordinates of [y] in the representative basis; throws NotCocycle
     * when d(y) != 0. */
    Vec class_of(const Homog& y) const;

private:
    Field field_;
    int degree_;
    std::vector<Homog> reps_;
    Matrix span_;  // columns: image basis then representatives
};

/* x with d(x) = y, chosen deterministically (echelon preimage, free
 * variables zero). Throws NotCocycle if d(y) != 0, NotCoboundary if no
 * preimage exists. */
Homog solve_coboundary(const Complex& c, const Homog& y);

}  // namespace dglift
