#pragma once

#include "procat/probar/classic.hpp"
#include "procat/probar/fullness.hpp"
#include "procat/probar/inverse_equivalence.hpp"
#include "procat/probar/object.hpp"
#include "procat/probar/one_morphism.hpp"
#include "procat/probar/rectify.hpp"
#include "procat/probar/s_functor.hpp"
#include "procat/probar/shaped.hpp"
