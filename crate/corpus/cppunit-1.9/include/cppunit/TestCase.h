#ifndef CPPUNIT_TESTCASE_H
#define CPPUNIT_TESTCASE_H

#include <string>
#include <cppunit/Test.h>
#include <cppunit/Exception.h>

namespace CppUnit {

class TestResult;

/*! \brief A single test object.
 *
 * This class is used to implement a simple test case: define a subclass
 * that overrides the runTest method.
 *
 * A test case defines the fixture to run multiple tests.
 * To define a test case
 * do the following:
 * - implement a subclass of TestCase
 * - the fixture is defined by instance variables
 * - initialize the fixture state by overriding setUp
 *   (i.e. construct the instance variables of the fixture)
 * - clean-up after a test by overriding tearDown.
 *
 * \see TestResult
 * \see TestSuite
 * \see TestCaller
 */
class TestCase : public Test
{
public:
    TestCase ();
    TestCase (std::string Name);
    ~TestCase ();

    virtual void run (TestResult *result);
    virtual int countTestCases () const;
    std::string getName () const;
    std::string toString () const;

    virtual void setUp ();
    virtual void tearDown ();

    virtual TestResult *run ();

protected:
    virtual void runTest ();

    TestResult *defaultResult ();

    void assertImplementation (bool condition,
                               std::string conditionExpression = "",
                               long lineNumber = Exception::UNKNOWNLINENUMBER,
                               std::string fileName = Exception::UNKNOWNFILENAME);

private:
    TestCase (const TestCase& other);
    TestCase& operator= (const TestCase& other);

private:
    const std::string m_name;
};

} // namespace CppUnit

#endif // CPPUNIT_TESTCASE_H
