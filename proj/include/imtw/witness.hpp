#ifndef IMTW_WITNESS_HPP
#define IMTW_WITNESS_HPP

#include <string>

#include "imtw/decomposition.hpp"
#include "imtw/graph.hpp"

namespace imtw {

// Structured certificate returned by checkers and extractors.
struct WitnessReport {
    enum class Kind {
        InducedMatching, // e.g. a touching matching refuting mu(T) <= mu
        Biclique,        // an induced K_{t,t} refuting K_{t,t}-freeness
        Axiom,           // a violated decomposition axiom
        BoundTrace,      // measured quantity vs. threshold
    };
    Kind kind = Kind::BoundTrace;
    Matching matching;
    BicliqueWitness biclique;
    AxiomViolation axiom;
    int node = -1; // decomposition node the certificate refers to, if any
    std::string message;
};

} // namespace imtw

#endif
