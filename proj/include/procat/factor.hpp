#pragma once

#include "procat/factor/chi.hpp"
#include "procat/factor/lifting.hpp"
#include "procat/factor/predicate.hpp"
#include "procat/factor/pro_factorize.hpp"
#include "procat/factor/pseudo.hpp"
#include "procat/factor/reedy.hpp"
#include "procat/factor/special.hpp"
