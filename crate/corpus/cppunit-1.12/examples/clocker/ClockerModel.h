// //////////////////////////////////////////////////////////////////////////
// Header file ClockerModel.h for class ClockerModel
// (c)Copyright 2000, Baptiste Lepilleur.
// Created: 2002/06/14
// //////////////////////////////////////////////////////////////////////////
#ifndef CLOCKERMODEL_H
#define CLOCKERMODEL_H

#include <cppunit/Test.h>
#include <deque>
#include <string>
#include "Timer.h"


/// Model that represents test timing.
class ClockerModel
{
public:
  /*! Constructs a ClockerModel object.
   */
  ClockerModel();

  /// Destructor.
  virtual ~ClockerModel();

  void setExpectedTestCount( int count );

  void enterTest( CppUnit::Test *test,
                  bool isSuite );

  void exitTest( CppUnit::Test *test,
                 bool isSuite );

  double totalElapsedTime() const;

  double averageTestCaseTime() const;

  double testTimeFor( int testIndex ) const;

  std::string testNameFor( int testIndex ) const;

  int testCount() const;

  static std::string timeStringFor( double time );

private:
  struct TestInfo
  {
    std::string m_name;
    Timer m_timer;
    bool m_isSuite;
  };

  /// Prevents the use of the copy constructor.
  ClockerModel( const ClockerModel &other );

  /// Prevents the use of the copy operator.
  void operator =( const ClockerModel &other );

private:
  typedef std::deque<int> Indexes;
  Indexes m_currentIndexes;
  double m_totalTestCaseTime;
  int m_testCaseCount;
  std::deque<TestInfo> m_tests;
};



#endif  // CLOCKERMODEL_H
