#ifndef AUT_AUT_HPP
#define AUT_AUT_HPP

#include "aut/alphabet.hpp"
#include "aut/base.hpp"
#include "aut/congruence.hpp"
#include "aut/dfa.hpp"
#include "aut/equations.hpp"
#include "aut/io.hpp"
#include "aut/lasso.hpp"
#include "aut/laws.hpp"
#include "aut/omega.hpp"
#include "aut/oracle.hpp"
#include "aut/partition.hpp"
#include "aut/random.hpp"

#endif
