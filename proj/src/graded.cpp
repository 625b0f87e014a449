#include "dglift/graded.hpp"

#include <algorithm>

namespace dglift {

const std::vector<std::string> GradedSpace::empty_;

void GradedSpace::add_basis_label(int degree, const std::string& label)
{
    auto& at_degree = labels_[degree];
    if (std::find(at_degree.begin(), at_degree.end(), label) != at_degree.end())
        throw ShapeError("duplicate basis label '" + label + "' in degree " + std::to_string(degree));
    at_degree.push_back(label);
}

size_t GradedSpace::dim(int degree) const
{
    auto it = labels_.find(degree);
    return it == labels_.end() ? 0 : it->second.size();
}

size_t GradedSpace::total_dim() const
{
    size_t n = 0;
    for (const auto& [deg, ls] : labels_)
        n += ls.size();
    return n;
}

const std::vector<std::string>& GradedSpace::labels(int degree) const
{
    auto it = labels_.find(degree);
    return it == labels_.end() ? empty_ : it->second;
}

std::vector<int> GradedSpace::support() const
{
    std::vector<int> degrees;
    for (const auto& [deg, ls] : labels_)
        if (!ls.empty())
            degrees.push_back(deg);
    return degrees;
}

int GradedSpace::min_degree() const
{
    auto s = support();
    return s.empty() ? 0 : s.front();
}

int GradedSpace::max_degree() const
{
    auto s = support();
    return s.empty() ? 0 : s.back();
}

size_t GradedSpace::index_of(int degree, const std::string& label) const
{
    const auto& ls = labels(degree);
    auto it = std::find(ls.begin(), ls.end(), label);
    if (it == ls.end())
        throw ShapeError("no basis label '" + label + "' in degree " + std::to_string(degree));
    return static_cast<size_t>(it - ls.begin());
}

bool GradedSpace::has_label(const std::string& label) const
{
    for (const auto& [deg, ls] : labels_)
        if (std::find(ls.begin(), ls.end(), label) != ls.end())
            return true;
    return false;
}

Homog zero_homog(const GradedSpace& space, int degree)
{
    return Homog{degree, zero_vec(space.field(), space.dim(degree))};
}

Homog basis_homog(const GradedSpace& space, int degree, size_t index)
{
    return Homog{degree, unit_vec(space.field(), space.dim(degree), index)};
}

Homog add(const Homog& a, const Homog& b)
{
    if (a.degree != b.degree) {
        if (a.is_zero() && a.coords.empty())
            return b;
        if (b.is_zero() && b.coords.empty())
            return a;
        throw DegreeMismatch("adding elements of degrees " + std::to_string(a.degree) + " and "
                             + std::to_string(b.degree));
    }
    return Homog{a.degree, add(a.coords, b.coords)};
}

Homog sub(const Homog& a, const Homog& b)
{
    return add(a, negate(b));
}

Homog scale(const FieldElement& c, const Homog& v)
{
    return Homog{v.degree, scale(c, v.coords)};
}

Homog negate(const Homog& v)
{
    Vec coords = v.coords;
    for (auto& x : coords)
        x = -x;
    return Homog{v.degree, coords};
}

bool equal(const Homog& a, const Homog& b)
{
    if (a.degree == b.degree)
        return a.coords == b.coords;
    return a.is_zero() && b.is_zero();
}

void GradedMap::set_block(int degree, Matrix block)
{
    if (block.rows() != target_.dim(degree + shift_) || block.cols() != source_.dim(degree))
        throw ShapeError("block shape mismatch in degree " + std::to_string(degree));
    blocks_.insert_or_assign(degree, std::move(block));
}

Matrix GradedMap::block(int degree) const
{
    auto it = blocks_.find(degree);
    if (it != blocks_.end())
        return it->second;
    return Matrix(source_.field(), target_.dim(degree + shift_), source_.dim(degree));
}

bool GradedMap::operator==(const GradedMap& other) const
{
    if (!(source_ == other.source_) || !(target_ == other.target_) || shift_ != other.shift_)
        return false;
    for (int deg : source_.support())
        if (!(block(deg) == other.block(deg)))
            return false;
    return true;
}

Homog apply_graded_map(const GradedMap& m, const Homog& v)
{
    if (v.coords.size() != m.source().dim(v.degree))
        throw ShapeError("element has " + std::to_string(v.coords.size()) + " coordinates but degree "
                         + std::to_string(v.degree) + " has dimension "
                         + std::to_string(m.source().dim(v.degree)));
    return Homog{v.degree + m.shift(), m.block(v.degree).apply(v.coords)};
}

Complex::Complex(GradedSpace space, GradedMap differential) : space_(std::move(space)), d_(std::move(differential))
{
    if (d_.shift() != 1)
        throw ShapeError("differential must have shift +1");
    if (!(d_.source() == space_) || !(d_.target() == space_))
        throw ShapeError("differential must be an endomorphism of the underlying space");
}

Complex Complex::with_zero_differential(GradedSpace space)
{
    GradedMap d(space, space, 1);
    return Complex(std::move(space), std::move(d));
}

std::vector<std::string> Complex::validate() const
{
    std::vector<std::string> problems;
    for (int deg : space_.support()) {
        const Matrix dd = d_.block(deg + 1) * d_.block(deg);
        if (!dd.is_zero())
            problems.push_back("d∘d != 0 on degree " + std::to_string(deg));
    }
    return problems;
}

CohomologyBasis::CohomologyBasis(const Complex& c, int degree)
    : field_(c.space().field()), degree_(degree), span_(field_, c.space().dim(degree), 0)
{
    const size_t n = c.space().dim(degree);
    const Matrix d_here = c.differential().block(degree);
    const Matrix d_below = c.differential().block(degree - 1);

    const std::vector<Vec> ker = kernel_basis(d_here);
    const std::vector<Vec> img = column_space_basis(d_below);

    /* Extend the image basis to a basis of the kernel; the added kernel
     * vectors are the canonical representatives. */
    std::vector<Vec> cols = img;
    cols.insert(cols.end(), ker.begin(), ker.end());
    Matrix probe = Matrix::from_columns(field_, n, cols);
    const auto pivots = probe.rref();
    std::vector<Vec> chosen = img;
    for (size_t c_idx : pivots) {
        if (c_idx < img.size())
            continue;
        const Vec& v = ker[c_idx - img.size()];
        chosen.push_back(v);
        reps_.push_back(Homog{degree, v});
    }
    span_ = Matrix::from_columns(field_, n, chosen);
}

Vec CohomologyBasis::class_of(const Homog& y) const
{
    if (y.degree != degree_ && !y.is_zero())
        throw DegreeMismatch("class_of: element of degree " + std::to_string(y.degree) + " in degree "
                             + std::to_string(degree_) + " cohomology");
    if (y.is_zero())
        return zero_vec(field_, reps_.size());
    auto sol = solve(span_, y.coords);
    if (!sol)
        throw NotCocycle("class_of: element is not a cocycle");
    Vec coords = zero_vec(field_, reps_.size());
    const size_t img_dim = span_.cols() - reps_.size();
    for (size_t i = 0; i < reps_.size(); ++i)
        coords[i] = (*sol)[img_dim + i];
    return coords;
}

Homog solve_coboundary(const Complex& c, const Homog& y)
{
    const Homog dy = c.d(y);
    if (!dy.is_zero())
        throw NotCocycle("solve_coboundary: d(y) != 0 in degree " + std::to_string(y.degree));
    const Matrix d_below = c.differential().block(y.degree - 1);
    auto x = solve(d_below, y.coords);
    if (!x)
        throw NotCoboundary("solve_coboundary: no preimage in degree " + std::to_string(y.degree - 1));
    return Homog{y.degree - 1, *x};
}

}  // namespace dglift
