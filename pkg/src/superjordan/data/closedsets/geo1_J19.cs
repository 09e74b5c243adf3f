[closedset]
label = geo1_J19
source = J19
targets = J7 J15 J16
basis = f1 f2 f3 e
condition: A2*A2 <= A2
condition: c[1,4,1] = c[4,4,4]
condition: c[2,4,2] = c[4,4,4]
condition: c[3,4,3] = c[4,4,4]
