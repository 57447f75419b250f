#pragma once

#include <vector>

#include "hcu/field.hpp"
#include "hcu/grid.hpp"

namespace hcu {

// One scalar per interior cell; 2-D is row-major with x fastest.
struct ScalarField1 {
    Grid1D grid;
    std::vector<double> v;
};

struct ScalarField2 {
    Grid2D grid;
    std::vector<double> v;

    double& at(int j, int k) { return v[static_cast<size_t>(k) * grid.nx + j]; }
    double at(int j, int k) const { return v[static_cast<size_t>(k) * grid.nx + j]; }
};

ScalarField1 component_field(const Grid1D& g, const Field1D<3>& f, int comp);
ScalarField2 component_field(const Grid2D& g, const Field2D<4>& f, int comp);

// Conservative coarse-to-fine projection: minmod piecewise-linear
// reconstruction of the coarse cells (zero slope in the edge cells), then
// exact averages of that function over each fine cell. Target must be a
// power-of-2 multiple per dimension; 2-D runs x first, then y.
ScalarField1 project_refine(const ScalarField1& coarse, const Grid1D& target);
ScalarField2 project_refine(const ScalarField2& coarse, const Grid2D& target);

// Exact block averaging fine -> coarse (any integer factor); used to compare
// runs against a finer reference.
ScalarField1 restrict_average(const ScalarField1& fine, const Grid1D& target);
ScalarField2 restrict_average(const ScalarField2& fine, const Grid2D& target);

// Arithmetic mean of fields on a common grid, summed in input order.
ScalarField2 cesaro_average(const std::vector<ScalarField2>& fields);

double l1_error(const ScalarField1& a, const ScalarField1& b);
double l1_error(const ScalarField2& a, const ScalarField2& b);
double l1_norm(const ScalarField1& a);
double l1_norm(const ScalarField2& a);
double total(const ScalarField1& a);
double total(const ScalarField2& a);

}  // namespace hcu
