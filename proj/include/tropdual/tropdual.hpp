#pragma once

#include "tropdual/rational.hpp"
#include "tropdual/trop.hpp"
#include "tropdual/polynomial.hpp"
#include "tropdual/parse.hpp"
#include "tropdual/polyhedron.hpp"
#include "tropdual/region.hpp"
#include "tropdual/bend.hpp"
#include "tropdual/congruence.hpp"
#include "tropdual/constructions.hpp"
#include "tropdual/svg.hpp"
#include "tropdual/verify.hpp"
