#pragma once
// A metric in local coordinates: a smooth map from a coordinate vector to a
// symmetric positive matrix of components.  Fields carry two evaluators
// instantiated from one generic callable, so the same expression runs on
// plain doubles and on second-order jets (the oracle's input).
#include <functional>
#include <span>
#include <utility>

#include "cglab/jet.hpp"
#include "cglab/nd.hpp"

namespace cglab {

struct MetricField {
    int dim = 0;
    std::function<void(std::span<const double>, Mat<double>&)> eval;
    std::function<void(std::span<const Jet2>, Mat<Jet2>&)> eval_jet;
    // null means the whole coordinate space is admissible
    std::function<bool(std::span<const double>)> in_domain;

    bool admissible(std::span<const double> x) const {
        return !in_domain || in_domain(x);
    }
};

// f is a generic callable: template <class T> void f(span<const T> x, Mat<T>& g).
template <class F>
MetricField make_metric_field(int dim, F f,
                              std::function<bool(std::span<const double>)> domain = {}) {
    MetricField field;
    field.dim = dim;
    field.eval = [f, dim](std::span<const double> x, Mat<double>& g) {
        g = Mat<double>(dim, dim, 0.0);
        f(x, g);
    };
    field.eval_jet = [f, dim](std::span<const Jet2> x, Mat<Jet2>& g) {
        g = Mat<Jet2>(dim, dim, zero_like(x[0]));
        f(x, g);
    };
    field.in_domain = std::move(domain);
    return field;
}

} // namespace cglab
