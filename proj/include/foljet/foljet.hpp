#ifndef FOLJET_FOLJET_HPP
#define FOLJET_FOLJET_HPP

#include "rational.hpp"
#include "context.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "gcd.hpp"
#include "linalg.hpp"
#include "groebner.hpp"
#include "jets.hpp"
#include "oneform.hpp"
#include "tangency.hpp"
#include "blowup.hpp"
#include "classify.hpp"
#include "resolve.hpp"
#include "parse.hpp"

#endif
