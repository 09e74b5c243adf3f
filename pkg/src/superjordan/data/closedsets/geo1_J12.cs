[closedset]
label = geo1_J12
source = J12
targets = J7 J8 J9 J11 J15 J16 J17 J19
basis = f1 f2 f3 e
condition: J*J <= span(x2,x3,x4)
condition: c[4,4,4] = 2*c[2,4,2]
condition: c[4,4,4] = c[3,4,3]
