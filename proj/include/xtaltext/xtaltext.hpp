#ifndef XTALTEXT_XTALTEXT_HPP
#define XTALTEXT_XTALTEXT_HPP

#include "xtaltext/cif.hpp"
#include "xtaltext/client.hpp"
#include "xtaltext/crystal.hpp"
#include "xtaltext/dataset.hpp"
#include "xtaltext/elements.hpp"
#include "xtaltext/errors.hpp"
#include "xtaltext/fingerprint.hpp"
#include "xtaltext/generate.hpp"
#include "xtaltext/instructions.hpp"
#include "xtaltext/lattice.hpp"
#include "xtaltext/metrics.hpp"
#include "xtaltext/predictor.hpp"
#include "xtaltext/preprocess.hpp"
#include "xtaltext/prompts.hpp"
#include "xtaltext/rng.hpp"
#include "xtaltext/selection.hpp"
#include "xtaltext/sgs.hpp"
#include "xtaltext/symmetry.hpp"
#include "xtaltext/vec.hpp"

#endif
