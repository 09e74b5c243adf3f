[closedset]
label = geo2_Jc65
source = Jc65
targets = Jc58
basis = e1 e2 f1 f2
condition: c[1,2,1] = 0
condition: c[1,1,1]-c[1,3,3] = 0
