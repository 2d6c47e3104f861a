// Everything in one include.
#pragma once

#include "qrep/field.hpp"
#include "qrep/matrix.hpp"
#include "qrep/quiver.hpp"
#include "qrep/algebra.hpp"
#include "qrep/representation.hpp"
#include "qrep/hom.hpp"
#include "qrep/ar.hpp"
#include "qrep/gallery.hpp"
#include "qrep/io.hpp"
