#ifndef CPPUNIT_TEST_H
#define CPPUNIT_TEST_H

#include <string>

namespace CppUnit {

class TestResult;

/*! \brief Base class for all test objects.
 *
 * All test objects should be a subclass of Test.  Some test objects,
 * TestCase for example, represent one individual test.  Other test
 * objects, such as TestSuite, are comprised of several tests.
 *
 * When a Test is run, the result is collected by a TestResult object.
 *
 * \see TestCase
 * \see TestSuite
 */
class Test
{
public:
    virtual                       ~Test () {};

    /*! \brief Run the test, collecting results.
     */
    virtual void                  run (TestResult *result)    = 0;

    /*! \brief Return the number of test cases invoked by run().
     */
    virtual int                   countTestCases () const     = 0;

    /*! \brief Returns the test name.
     */
    virtual std::string           getName () const            = 0;

    /*! \brief Description of the test, for diagnostic output.
     */
    virtual std::string           toString () const           = 0;
};

} // namespace CppUnit

#endif // CPPUNIT_TEST_H
