#ifndef CPPUNIT_TESTFIXTURE_H    // -*- C++ -*-
#define CPPUNIT_TESTFIXTURE_H

#include <cppunit/Portability.h>

namespace CppUnit {

/*! \brief Wraps a test case with setUp and tearDown methods.
 * \ingroup WritingTestFixture
 *
 * A TestFixture is used to provide a common environment for a set
 * of test cases.
 *
 * To define a test fixture, do the following:
 * - implement a subclass of TestCase
 * - the fixture is defined by instance variables
 * - initialize the fixture state by overriding setUp
 *   (i.e. construct the instance variables of the fixture)
 * - clean-up after a test by overriding tearDown.
 */
class CPPUNIT_API TestFixture
{
public:
  virtual ~TestFixture() {};

  //! \brief Set up context before running a test.
  virtual void setUp() {};

  //! Clean up after the test run.
  virtual void tearDown() {};
};

} // namespace CppUnit

#endif
