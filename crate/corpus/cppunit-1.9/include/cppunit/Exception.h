#ifndef CPPUNIT_EXCEPTION_H
#define CPPUNIT_EXCEPTION_H

#include <exception>
#include <string>

namespace CppUnit {

/*! \brief Exceptions thrown by failed assertions.
 *
 * Exception is an exception that serves
 * descriptive strings through its what() method
 */
class Exception : public std::exception
{
public:
    static const long UNKNOWNLINENUMBER;
    static const std::string UNKNOWNFILENAME;

    Exception( std::string  message    = "",
               long         lineNumber = UNKNOWNLINENUMBER,
               std::string  fileName   = UNKNOWNFILENAME);
    Exception (const Exception& other);

    virtual ~Exception () throw();

    Exception& operator= (const Exception& other);

    const char *what() const throw ();

    long lineNumber ();
    std::string fileName ();

private:
    std::string m_message;
    long        m_lineNumber;
    std::string m_fileName;
};

} // namespace CppUnit

#endif // CPPUNIT_EXCEPTION_H
