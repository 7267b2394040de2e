#ifndef CPPUNIT_TESTCALLER_H
#define CPPUNIT_TESTCALLER_H

#include <cppunit/TestCase.h>

namespace CppUnit {

/*! \brief Generate a test case from a fixture method.
 *
 * A test caller provides access to a test case method
 * on a test case class.  Test callers are useful when
 * you want to run an individual test or add it to a
 * suite.
 * Test Callers invoke only one Test (i.e. test method) on one
 * Fixture of a TestCase.
 *
 * \see TestCase
 */
template <typename Fixture>
class TestCaller : public TestCase
{
    typedef void (Fixture::*TestMethod)();

public:
    TestCaller (std::string name, TestMethod test) :
        TestCase (name),
        m_ownFixture (true),
        m_fixture (new Fixture ()),
        m_test (test)
    {
    }

    TestCaller (std::string name, TestMethod test, Fixture* fixture) :
        TestCase (name),
        m_ownFixture (false),
        m_fixture (fixture),
        m_test (test)
    {
    }

    ~TestCaller()
    {
        if (m_ownFixture)
            delete m_fixture;
    }

protected:
    void runTest ()
    {
        (m_fixture->*m_test)();
    }

    void setUp ()
    {
        m_fixture->setUp ();
    }

    void tearDown ()
    {
        m_fixture->tearDown ();
    }

    std::string toString () const
    {
        return "TestCaller " + getName();
    }

private:
    TestCaller (const TestCaller& other);
    TestCaller& operator= (const TestCaller& other);

private:
    bool m_ownFixture;
    Fixture *m_fixture;
    TestMethod m_test;
};

} // namespace CppUnit

#endif // CPPUNIT_TESTCALLER_H
