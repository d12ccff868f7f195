#pragma once

#include <stdexcept>
#include <string>

namespace layerslab {

// Base for every named failure the library can raise.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define LAYERSLAB_ERROR(Name)                                        \
    struct Name : Error {                                            \
        explicit Name(const std::string& what = #Name) : Error(what) {} \
    }

// graph-core
LAYERSLAB_ERROR(DuplicateEdge);
LAYERSLAB_ERROR(SelfLoop);
LAYERSLAB_ERROR(EndpointOutOfRange);
LAYERSLAB_ERROR(DepthZero);
LAYERSLAB_ERROR(OddDegreeSum);
LAYERSLAB_ERROR(AttemptsExhausted);

// layers-sampler
LAYERSLAB_ERROR(TiesDetected);

// tree-paths / t2-forest
LAYERSLAB_ERROR(DegreeTooSmall);
LAYERSLAB_ERROR(TooLarge);
LAYERSLAB_ERROR(EnumerationTooLarge);
LAYERSLAB_ERROR(BadConfig);

// lattice-monotone
LAYERSLAB_ERROR(DivergentSeries);
LAYERSLAB_ERROR(BudgetExhausted);

// degree-random-graphs
LAYERSLAB_ERROR(KTooLarge);
LAYERSLAB_ERROR(BadOrder);

// experiment-cli
LAYERSLAB_ERROR(UnknownExperiment);
LAYERSLAB_ERROR(InvalidConfig);
LAYERSLAB_ERROR(IoFailure);

#undef LAYERSLAB_ERROR

} // namespace layerslab
