#pragma once

// Umbrella header.

#include "polymat/cm_classify.hpp"
#include "polymat/codim1.hpp"
#include "polymat/decompose.hpp"
#include "polymat/enumerate.hpp"
#include "polymat/homology.hpp"
#include "polymat/ideal.hpp"
#include "polymat/localize.hpp"
#include "polymat/monomial.hpp"
#include "polymat/parse.hpp"
#include "polymat/polymatroid.hpp"
#include "polymat/simplicial.hpp"
#include "polymat/sr_oracle.hpp"
#include "polymat/suites.hpp"
