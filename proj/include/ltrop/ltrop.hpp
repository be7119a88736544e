#pragma once

#include "ltrop/cone.hpp"
#include "ltrop/errors.hpp"
#include "ltrop/factor.hpp"
#include "ltrop/ideals.hpp"
#include "ltrop/lifting.hpp"
#include "ltrop/number_field.hpp"
#include "ltrop/polynomial.hpp"
#include "ltrop/scalars.hpp"
#include "ltrop/series.hpp"
#include "ltrop/tropical.hpp"
#include "ltrop/upoly.hpp"
#include "ltrop/valfan.hpp"
#include "ltrop/zfactor.hpp"
